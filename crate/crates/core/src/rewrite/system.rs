use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::ncpoly::{Alphabet, Letter, NCPolynomial, Word};
use crate::scalar::Scalar;

use super::order::{MonomialOrder, OrderKey};
use super::RewriteError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleOrigin {
    Input,
    Completion,
}

/// Oriented relation `lead → rhs`; every word of `rhs` is below `lead`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: Word,
    pub rhs: NCPolynomial,
    pub origin: RuleOrigin,
}

impl RewriteRule {
    /// The relation `lead - rhs` this rule came from.
    pub fn relation(&self) -> NCPolynomial {
        &NCPolynomial::word(self.lead.clone()) - &self.rhs
    }
}

/// Turns a relation into a rule: its leading word, made monic, rewrites to
/// the negated remainder.
pub fn orient(relation: &NCPolynomial, order: &MonomialOrder) -> Result<RewriteRule, RewriteError> {
    let (lead, c) = order.leading(relation).ok_or(RewriteError::ZeroRelation)?;
    let lead = lead.clone();
    let inv = -c.recip();
    let mut rhs = NCPolynomial::zero();
    for (w, x) in relation.terms() {
        if *w != lead {
            if w.degree() > lead.degree() {
                return Err(RewriteError::DegreeIncreasing { lead: lead.degree(), word: w.degree() });
            }
            rhs.add_term(w.clone(), x * &inv);
        }
    }
    Ok(RewriteRule { lead, rhs, origin: RuleOrigin::Input })
}

/// Which redex to contract when a word has several.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Leftmost occurrence, lowest rule index among rules matching there.
    #[default]
    Leftmost,
    /// Rightmost occurrence, longest leading word among rules matching there.
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
    by_first: Vec<Vec<usize>>,
    budget_factor: usize,
}

const MIN_BUDGET: usize = 8;

impl RewriteSystem {
    pub fn new(alphabet: Alphabet, order: MonomialOrder) -> Self {
        let n = alphabet.len();
        Self { alphabet, order, rules: Vec::new(), by_first: vec![Vec::new(); n], budget_factor: 2 }
    }

    /// Orients every relation after reducing it by the rules added so far;
    /// relations that reduce to zero are dropped.
    pub fn from_relations(
        alphabet: Alphabet,
        order: MonomialOrder,
        relations: &[NCPolynomial],
    ) -> Result<Self, RewriteError> {
        let mut sys = Self::new(alphabet, order);
        for r in relations {
            let reduced = sys.normal_form(r)?;
            if reduced.is_zero() {
                continue;
            }
            let rule = orient(&reduced, &sys.order)?;
            sys.push_rule(rule)?;
        }
        Ok(sys)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Intermediate words may grow to `factor × query degree` before
    /// reduction gives up.
    pub fn with_budget_factor(mut self, factor: usize) -> Self {
        self.budget_factor = factor.max(1);
        self
    }

    pub fn push_rule(&mut self, rule: RewriteRule) -> Result<usize, RewriteError> {
        if rule.lead.is_empty() {
            return Err(RewriteError::ZeroRelation);
        }
        if self.rules.iter().any(|r| r.lead == rule.lead) {
            return Err(RewriteError::DuplicateLead(self.alphabet.render_word(&rule.lead)));
        }
        let first = rule.lead.letters()[0].index();
        if first >= self.by_first.len() {
            return Err(RewriteError::Nc(crate::ncpoly::NcError::MissingRole(rule.lead.letters()[0])));
        }
        let idx = self.rules.len();
        self.by_first[first].push(idx);
        self.rules.push(rule);
        Ok(idx)
    }

    pub(crate) fn replace_rules(&mut self, rules: Vec<RewriteRule>) {
        self.rules.clear();
        self.by_first.iter_mut().for_each(Vec::clear);
        for r in rules {
            let first = r.lead.letters()[0].index();
            self.by_first[first].push(self.rules.len());
            self.rules.push(r);
        }
    }

    /// A redex `(rule index, position)` in `w`, if any.
    pub fn find_match(&self, w: &Word, strategy: Strategy) -> Option<(usize, usize)> {
        let ls = w.letters();
        let at = |pos: usize| -> Option<usize> {
            let cands = self.by_first.get(ls[pos].index())?;
            match strategy {
                Strategy::Leftmost => cands.iter().copied().find(|&i| w.occurs_at(self.rules[i].lead.letters(), pos)),
                Strategy::Rightmost => cands
                    .iter()
                    .copied()
                    .filter(|&i| w.occurs_at(self.rules[i].lead.letters(), pos))
                    .max_by_key(|&i| (self.rules[i].lead.degree(), std::cmp::Reverse(i))),
            }
        };
        match strategy {
            Strategy::Leftmost => (0..ls.len()).find_map(|p| at(p).map(|i| (i, p))),
            Strategy::Rightmost => (0..ls.len()).rev().find_map(|p| at(p).map(|i| (i, p))),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_match(w, Strategy::Leftmost).is_none()
    }

    /// One rewrite step on `w` with rule `rule` at `pos`.
    pub fn rewrite_at(&self, w: &Word, rule: usize, pos: usize) -> NCPolynomial {
        let r = &self.rules[rule];
        let prefix = w.slice(0, pos);
        let suffix = w.slice(pos + r.lead.degree(), w.degree());
        let mut out = NCPolynomial::zero();
        for (m, c) in r.rhs.terms() {
            out.add_term(prefix.concat(m).concat(&suffix), c.clone());
        }
        out
    }

    pub fn normal_form(&self, p: &NCPolynomial) -> Result<NCPolynomial, RewriteError> {
        self.normal_form_with(p, Strategy::Leftmost)
    }

    /// Reduces the largest reducible word first until no leading word
    /// occurs. Each word is settled once since rewriting only produces
    /// smaller words.
    pub fn normal_form_with(&self, p: &NCPolynomial, strategy: Strategy) -> Result<NCPolynomial, RewriteError> {
        let limit = (self.budget_factor * p.degree()).max(MIN_BUDGET);
        let mut work: BTreeMap<OrderKey, (Word, Scalar)> = BTreeMap::new();
        let push = |work: &mut BTreeMap<OrderKey, (Word, Scalar)>, w: Word, c: Scalar| -> Result<(), RewriteError> {
            if w.degree() > limit {
                return Err(RewriteError::DegreeBudgetExceeded(limit));
            }
            let key = self.order.key(&w);
            match work.get_mut(&key) {
                Some(slot) => {
                    slot.1 += c;
                    if slot.1.is_zero() {
                        work.remove(&key);
                    }
                }
                None => {
                    if !c.is_zero() {
                        work.insert(key, (w, c));
                    }
                }
            }
            Ok(())
        };
        for (w, c) in p.terms() {
            push(&mut work, w.clone(), c.clone())?;
        }
        let mut out = NCPolynomial::zero();
        while let Some((_, (w, c))) = work.pop_last() {
            match self.find_match(&w, strategy) {
                None => out.add_term(w, c),
                Some((i, pos)) => {
                    let r = &self.rules[i];
                    let prefix = &w.letters()[..pos];
                    let suffix = &w.letters()[pos + r.lead.degree()..];
                    for (m, x) in r.rhs.terms() {
                        let mut v: Vec<Letter> = Vec::with_capacity(prefix.len() + m.degree() + suffix.len());
                        v.extend_from_slice(prefix);
                        v.extend_from_slice(m.letters());
                        v.extend_from_slice(suffix);
                        push(&mut work, Word::new(v), &c * x)?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form of the product of normal forms.
    pub fn mul(&self, p: &NCPolynomial, q: &NCPolynomial) -> Result<NCPolynomial, RewriteError> {
        self.normal_form(&p.nc_mul(q))
    }

    pub fn render(&self, p: &NCPolynomial) -> String {
        self.order.render(p, &self.alphabet)
    }

    pub fn render_rule(&self, r: &RewriteRule) -> String {
        format!("{} -> {}", self.alphabet.render_word(&r.lead), self.render(&r.rhs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    struct Fx {
        a: Alphabet,
        g: Letter,
        gi: Letter,
        a1: Letter,
        a2: Letter,
        ord: MonomialOrder,
    }

    fn fx() -> Fx {
        let mut a = Alphabet::new();
        let (g, gi) = a.add_group_gen("g").unwrap();
        let a1 = a.add_skew("a1", Word::letter(g), Word::one()).unwrap();
        let a2 = a.add_skew("a2", Word::letter(g), Word::one()).unwrap();
        let ord = MonomialOrder::for_alphabet(&a, &[g, gi, a2, a1]).unwrap();
        Fx { a, g, gi, a1, a2, ord }
    }

    fn m(ls: &[Letter]) -> NCPolynomial {
        NCPolynomial::monomial(ls)
    }

    #[test]
    fn orient_conjugation_relation() {
        let f = fx();
        // g a1 - a1 g - g + g g
        let rel = &(&(&m(&[f.g, f.a1]) - &m(&[f.a1, f.g])) - &m(&[f.g])) + &m(&[f.g, f.g]);
        let r = orient(&rel, &f.ord).unwrap();
        assert_eq!(r.lead, Word::new(vec![f.g, f.a1]));
        assert_eq!(r.rhs, &(&m(&[f.a1, f.g]) + &m(&[f.g])) - &m(&[f.g, f.g]));
    }

    #[test]
    fn orient_z_relation() {
        let f = fx();
        let z = NCPolynomial::from_terms([
            (Word::new(vec![f.a1, f.a2]), int(1)),
            (Word::new(vec![f.a2, f.a1]), int(-1)),
            (Word::new(vec![f.a1, f.a1]), q(-1, 2)),
            (Word::letter(f.a2), int(1)),
            (Word::letter(f.a1), q(1, 2)),
        ]);
        let r = orient(&z, &f.ord).unwrap();
        assert_eq!(r.lead, Word::new(vec![f.a2, f.a1]));
        let expected = NCPolynomial::from_terms([
            (Word::new(vec![f.a1, f.a2]), int(1)),
            (Word::new(vec![f.a1, f.a1]), q(-1, 2)),
            (Word::letter(f.a2), int(1)),
            (Word::letter(f.a1), q(1, 2)),
        ]);
        assert_eq!(r.rhs, expected);
        assert_eq!(f.ord.render(&r.rhs, &f.a), "a1 a2 - 1/2 a1 a1 + a2 + 1/2 a1");
    }

    #[test]
    fn orient_rejects_zero_and_degree_growth() {
        let f = fx();
        assert!(matches!(orient(&NCPolynomial::zero(), &f.ord), Err(RewriteError::ZeroRelation)));
        // degree dominates weight
        let r = orient(&(&m(&[f.a1]) - &m(&[f.g, f.g])), &f.ord).unwrap();
        assert_eq!(r.lead, Word::new(vec![f.g, f.g]));
        assert_eq!(r.rhs, m(&[f.a1]));
    }

    fn inverse_rules(f: &Fx) -> RewriteSystem {
        let one = NCPolynomial::one();
        RewriteSystem::from_relations(
            f.a.clone(),
            f.ord.clone(),
            &[&m(&[f.g, f.gi]) - &one, &m(&[f.gi, f.g]) - &one],
        )
        .unwrap()
    }

    #[test]
    fn group_cancellation() {
        let f = fx();
        let s = inverse_rules(&f);
        assert_eq!(s.normal_form(&m(&[f.g, f.gi])).unwrap(), NCPolynomial::one());
        assert_eq!(s.normal_form(&m(&[f.g, f.g, f.gi, f.a1, f.gi, f.g])).unwrap(), m(&[f.g, f.a1]));
    }

    #[test]
    fn strategies_pick_different_redexes() {
        let f = fx();
        let s = inverse_rules(&f);
        let w = Word::new(vec![f.g, f.gi, f.g]);
        assert_eq!(s.find_match(&w, Strategy::Leftmost), Some((0, 0)));
        assert_eq!(s.find_match(&w, Strategy::Rightmost), Some((1, 1)));
    }

    #[test]
    fn duplicate_leads_are_rejected() {
        let f = fx();
        let mut s = inverse_rules(&f);
        let dup = RewriteRule { lead: Word::new(vec![f.g, f.gi]), rhs: NCPolynomial::zero(), origin: RuleOrigin::Input };
        assert!(matches!(s.push_rule(dup), Err(RewriteError::DuplicateLead(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let f = fx();
        // a mis-oriented system: a1 -> a1 a1 under a weight-only order loops upward
        let ord = MonomialOrder::new(&[f.a1, f.g, f.gi, f.a2], vec![0, 0, 0, 1]).unwrap();
        let mut s = RewriteSystem::new(f.a.clone(), ord);
        s.push_rule(RewriteRule { lead: Word::letter(f.a2), rhs: m(&[f.a1, f.a1]), origin: RuleOrigin::Input }).unwrap();
        s.push_rule(RewriteRule { lead: Word::letter(f.a1), rhs: m(&[f.a2, f.a2]), origin: RuleOrigin::Input }).unwrap();
        assert!(matches!(s.normal_form(&m(&[f.a2])), Err(RewriteError::DegreeBudgetExceeded(_))));
    }
}
