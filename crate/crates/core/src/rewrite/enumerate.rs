use std::collections::VecDeque;

use crate::ncpoly::{Letter, Word};

use super::complete::ConfluenceCertificate;
use super::system::RewriteSystem;
use super::RewriteError;

/// Normal words of length at most `maxlen`, grouped by length, each group
/// sorted by the system's order. The certificate must cover `maxlen`.
pub fn enumerate_normal_words(
    sys: &RewriteSystem,
    cert: &ConfluenceCertificate,
    maxlen: usize,
) -> Result<Vec<Vec<Word>>, RewriteError> {
    if !cert.covers(maxlen) {
        return Err(RewriteError::NoCertificate(maxlen));
    }
    Ok(normal_words_unchecked(sys, maxlen))
}

/// Irreducible words without any confluence guarantee.
pub fn normal_words_unchecked(sys: &RewriteSystem, maxlen: usize) -> Vec<Vec<Word>> {
    let letters: Vec<Letter> = sys.alphabet().letters().collect();
    let mut layers = vec![vec![Word::one()]];
    for n in 1..=maxlen {
        let mut next = Vec::new();
        for w in &layers[n - 1] {
            for &l in &letters {
                let v = w.concat(&Word::letter(l));
                if !ends_with_lead(sys, &v) {
                    next.push(v);
                }
            }
        }
        next.sort_by(|a, b| sys.order().cmp(a, b));
        layers.push(next);
    }
    layers
}

fn ends_with_lead(sys: &RewriteSystem, w: &Word) -> bool {
    let ls = w.letters();
    sys.rules().iter().any(|r| {
        let k = r.lead.degree();
        k <= ls.len() && ls[ls.len() - k..] == *r.lead.letters()
    })
}

/// Aho-Corasick automaton over the leading words; dead states are those
/// whose suffix contains a leading word.
struct Automaton {
    next: Vec<Vec<usize>>,
    dead: Vec<bool>,
}

impl Automaton {
    fn new(sys: &RewriteSystem) -> Self {
        let sigma = sys.alphabet().len();
        let mut goto: Vec<Vec<Option<usize>>> = vec![vec![None; sigma]];
        let mut dead = vec![false];
        for r in sys.rules() {
            let mut s = 0;
            for l in r.lead.letters() {
                s = match goto[s][l.index()] {
                    Some(t) => t,
                    None => {
                        goto.push(vec![None; sigma]);
                        dead.push(false);
                        let t = goto.len() - 1;
                        goto[s][l.index()] = Some(t);
                        t
                    }
                };
            }
            dead[s] = true;
        }
        let n = goto.len();
        let mut next = vec![vec![0usize; sigma]; n];
        let mut fail = vec![0usize; n];
        let mut queue = VecDeque::new();
        for c in 0..sigma {
            if let Some(t) = goto[0][c] {
                next[0][c] = t;
                queue.push_back(t);
            }
        }
        while let Some(s) = queue.pop_front() {
            dead[s] = dead[s] || dead[fail[s]];
            for c in 0..sigma {
                match goto[s][c] {
                    Some(t) => {
                        fail[t] = next[fail[s]][c];
                        next[s][c] = t;
                        queue.push_back(t);
                    }
                    None => next[s][c] = next[fail[s]][c],
                }
            }
        }
        Self { next, dead }
    }
}

/// Number of normal words of each length `0..=maxlen`, by dynamic
/// programming over the automaton. Requires no certificate; the counts
/// are only a basis dimension when the system is confluent.
pub fn count_normal_words(sys: &RewriteSystem, maxlen: usize) -> Vec<u128> {
    let aut = Automaton::new(sys);
    let n = aut.next.len();
    let mut cur = vec![0u128; n];
    cur[0] = 1;
    let mut out = vec![1u128];
    for _ in 0..maxlen {
        let mut nxt = vec![0u128; n];
        for (s, &c) in cur.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &t in &aut.next[s] {
                if !aut.dead[t] {
                    nxt[t] += c;
                }
            }
        }
        out.push(nxt.iter().sum());
        cur = nxt;
    }
    out
}

/// Running totals: entry `n` counts words of length at most `n`.
pub fn cumulative(counts: &[u128]) -> Vec<u128> {
    counts
        .iter()
        .scan(0u128, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncpoly::{Alphabet, NCPolynomial};
    use crate::rewrite::{complete, MonomialOrder};
    use crate::scalar::q;

    fn jordan() -> RewriteSystem {
        let mut a = Alphabet::new();
        let x1 = a.add_skew("x1", Word::one(), Word::one()).unwrap();
        let x2 = a.add_skew("x2", Word::one(), Word::one()).unwrap();
        let ord = MonomialOrder::deglex(&[x2, x1]).unwrap();
        let mut rel = &NCPolynomial::monomial(&[x2, x1]) - &NCPolynomial::monomial(&[x1, x2]);
        rel.add_term(Word::new(vec![x1, x1]), q(1, 2));
        RewriteSystem::from_relations(a, ord, &[rel]).unwrap()
    }

    #[test]
    fn jordan_plane_counts() {
        let s = jordan();
        let (s, cert) = complete(&s, 4).unwrap();
        let cum = cumulative(&count_normal_words(&s, 12));
        for (n, c) in cum.iter().enumerate() {
            let n = n as u128;
            assert_eq!(*c, (n + 1) * (n + 2) / 2);
        }
        let words = enumerate_normal_words(&s, &cert, 6).unwrap();
        let brute: Vec<usize> = words.iter().map(Vec::len).collect();
        assert_eq!(brute, vec![1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn length_zero_is_the_empty_word() {
        let s = jordan();
        let (s, cert) = complete(&s, 4).unwrap();
        assert_eq!(enumerate_normal_words(&s, &cert, 0).unwrap(), vec![vec![Word::one()]]);
        assert_eq!(count_normal_words(&s, 0), vec![1]);
    }

    #[test]
    fn enumeration_needs_a_certificate() {
        let s = jordan();
        let (s, mut cert) = complete(&s, 4).unwrap();
        cert.exhaustive = false;
        assert!(matches!(enumerate_normal_words(&s, &cert, 5), Err(RewriteError::NoCertificate(5))));
    }

    #[test]
    fn automaton_agrees_with_brute_force() {
        // leads sharing prefixes and suffixes
        let mut a = Alphabet::new();
        let x: Vec<Letter> = (0..3).map(|i| a.add_skew(&format!("x{i}"), Word::one(), Word::one()).unwrap()).collect();
        let ord = MonomialOrder::deglex(&[x[2], x[1], x[0]]).unwrap();
        let rels = [
            NCPolynomial::monomial(&[x[2], x[1], x[2]]),
            NCPolynomial::monomial(&[x[1], x[2], x[0]]),
            NCPolynomial::monomial(&[x[0], x[0]]),
        ];
        let s = RewriteSystem::from_relations(a, ord, &rels).unwrap();
        let dp = count_normal_words(&s, 7);
        let bf: Vec<u128> = normal_words_unchecked(&s, 7).iter().map(|l| l.len() as u128).collect();
        assert_eq!(dp, bf);
    }
}
