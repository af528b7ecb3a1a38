use std::collections::BTreeMap;

use serde::Serialize;

use crate::ncpoly::{NCPolynomial, Word};

use super::order::OrderKey;
use super::system::{orient, RewriteRule, RewriteSystem, RuleOrigin};
use super::RewriteError;

/// Word reducible in two ways: by `rule_a` at `pos_a` and `rule_b` at `pos_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap {
    pub word: Word,
    pub rule_a: usize,
    pub pos_a: usize,
    pub rule_b: usize,
    pub pos_b: usize,
}

/// All suffix/prefix and inclusion ambiguities of degree at most `maxdeg`.
pub fn find_overlaps(sys: &RewriteSystem, maxdeg: usize) -> Vec<Overlap> {
    let rules = sys.rules();
    let mut out = Vec::new();
    for a in 0..rules.len() {
        for b in 0..rules.len() {
            out.extend(overlaps_between(rules, a, b, maxdeg));
        }
    }
    out.sort_by(|x, y| {
        sys.order()
            .cmp(&x.word, &y.word)
            .then((x.rule_a, x.rule_b, x.pos_b).cmp(&(y.rule_a, y.rule_b, y.pos_b)))
    });
    out
}

fn overlaps_between(rules: &[RewriteRule], a: usize, b: usize, maxdeg: usize) -> Vec<Overlap> {
    let la = rules[a].lead.letters();
    let lb = rules[b].lead.letters();
    let mut out = Vec::new();
    // suffix of la equal to prefix of lb, proper on both sides
    for k in 1..la.len().min(lb.len()) {
        if la[la.len() - k..] == lb[..k] {
            let deg = la.len() + lb.len() - k;
            if deg <= maxdeg {
                out.push(Overlap {
                    word: rules[a].lead.concat(&Word::new(lb[k..].to_vec())),
                    rule_a: a,
                    pos_a: 0,
                    rule_b: b,
                    pos_b: la.len() - k,
                });
            }
        }
    }
    // lb strictly inside la
    if a != b && lb.len() <= la.len() && la.len() <= maxdeg {
        for p in 0..=la.len() - lb.len() {
            if la[p..p + lb.len()] == *lb {
                out.push(Overlap { word: rules[a].lead.clone(), rule_a: a, pos_a: 0, rule_b: b, pos_b: p });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    ConfluentUpTo(usize),
    Incomplete,
}

/// Outcome of [`complete`]. `exhaustive` means every ambiguity of the final
/// rule set has degree at most the bound, so confluence holds in all degrees.
#[derive(Clone, Debug)]
pub struct ConfluenceCertificate {
    pub degree: usize,
    pub resolved: Vec<Overlap>,
    pub added: Vec<RewriteRule>,
    pub verdict: Verdict,
    pub exhaustive: bool,
}

impl ConfluenceCertificate {
    /// Normal forms of inputs up to degree `deg` are unique.
    pub fn covers(&self, deg: usize) -> bool {
        match self.verdict {
            Verdict::ConfluentUpTo(d) => self.exhaustive || deg <= d,
            Verdict::Incomplete => false,
        }
    }
}

/// Stop adding rules beyond this many; the verdict is then `Incomplete`.
pub const RULE_CAP: usize = 400;

/// S-polynomial of an overlap, reduced to normal form.
pub fn resolve(sys: &RewriteSystem, ov: &Overlap) -> Result<NCPolynomial, RewriteError> {
    let left = sys.rewrite_at(&ov.word, ov.rule_a, ov.pos_a);
    let right = sys.rewrite_at(&ov.word, ov.rule_b, ov.pos_b);
    sys.normal_form(&(&left - &right))
}

/// Degree-bounded completion. Overlaps are processed smallest word first;
/// nonzero residues become new rules. The result is interreduced and every
/// ambiguity up to `maxdeg` is rechecked before a verdict is issued.
pub fn complete(sys: &RewriteSystem, maxdeg: usize) -> Result<(RewriteSystem, ConfluenceCertificate), RewriteError> {
    let mut sys = sys.clone();
    let mut capped = false;
    loop {
        let mut queue: BTreeMap<(OrderKey, usize), Overlap> = BTreeMap::new();
        let mut serial = 0usize;
        let mut enqueue = |queue: &mut BTreeMap<(OrderKey, usize), Overlap>, sys: &RewriteSystem, ov: Overlap| {
            queue.insert((sys.order().key(&ov.word), serial), ov);
            serial += 1;
        };
        for ov in find_overlaps(&sys, maxdeg) {
            enqueue(&mut queue, &sys, ov);
        }
        while let Some((_, ov)) = queue.pop_first() {
            let residue = resolve(&sys, &ov)?;
            if residue.is_zero() {
                continue;
            }
            if sys.rules().len() >= RULE_CAP {
                capped = true;
                break;
            }
            let mut rule = orient(&residue, sys.order())?;
            rule.origin = RuleOrigin::Completion;
            let idx = sys.push_rule(rule)?;
            for other in 0..sys.rules().len() {
                for ov in overlaps_between(sys.rules(), idx, other, maxdeg) {
                    enqueue(&mut queue, &sys, ov);
                }
                if other != idx {
                    for ov in overlaps_between(sys.rules(), other, idx, maxdeg) {
                        enqueue(&mut queue, &sys, ov);
                    }
                }
            }
        }
        if capped {
            break;
        }
        interreduce(&mut sys)?;
        let mut clean = true;
        for ov in find_overlaps(&sys, maxdeg) {
            if !resolve(&sys, &ov)?.is_zero() {
                clean = false;
                break;
            }
        }
        if clean {
            break;
        }
    }
    let resolved = find_overlaps(&sys, maxdeg);
    let added = sys.rules().iter().filter(|r| r.origin == RuleOrigin::Completion).cloned().collect();
    let longest = sys.rules().iter().map(|r| r.lead.degree()).max().unwrap_or(0);
    let exhaustive = !capped && (2 * longest).saturating_sub(1) <= maxdeg;
    let verdict = if capped { Verdict::Incomplete } else { Verdict::ConfluentUpTo(maxdeg) };
    Ok((sys, ConfluenceCertificate { degree: maxdeg, resolved, added, verdict, exhaustive }))
}

/// Drops rules whose relation follows from the others and reduces every
/// right-hand side to normal form.
fn interreduce(sys: &mut RewriteSystem) -> Result<(), RewriteError> {
    let mut rules = sys.rules().to_vec();
    let mut i = 0;
    while i < rules.len() {
        let others: Vec<RewriteRule> = rules.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, r)| r.clone()).collect();
        let covered = others.iter().any(|r| rules[i].lead.contains(&r.lead));
        if covered {
            let mut trial = sys.clone();
            trial.replace_rules(others.clone());
            if trial.normal_form(&rules[i].relation())?.is_zero() {
                rules = others;
                continue;
            }
        }
        i += 1;
    }
    sys.replace_rules(rules.clone());
    let mut reduced = Vec::with_capacity(rules.len());
    for r in &rules {
        let rhs = sys.normal_form(&r.rhs)?;
        reduced.push(RewriteRule { lead: r.lead.clone(), rhs, origin: r.origin });
    }
    sys.replace_rules(reduced);
    Ok(())
}
