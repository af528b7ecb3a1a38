//! Free abelian groups `Z^n`, characters, twisted derivations and the
//! degree-two maps `ξ` attached to a Jordanian lifting.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::{half, pow, Scalar};

/// Element of `Z^n` as an exponent vector.
pub type Exponents = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group rank must be at least 1")]
    ZeroRank,
    #[error("expected {expected} entries, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("distinguished element g must not be the identity")]
    TrivialG,
    #[error("character value at generator {0} is zero")]
    ZeroCharacter(usize),
    #[error("ξ is not well defined: ζ and η are not proportional ({0})")]
    InconsistentXi(String),
}

/// `Z^n` with named generators and a distinguished central element `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    names: Vec<String>,
    g: Exponents,
}

impl GroupSpec {
    pub fn new(names: Vec<String>, g: Exponents) -> Result<Self, GroupError> {
        if names.is_empty() {
            return Err(GroupError::ZeroRank);
        }
        if g.len() != names.len() {
            return Err(GroupError::RankMismatch { expected: names.len(), got: g.len() });
        }
        if g.iter().all(|&e| e == 0) {
            return Err(GroupError::TrivialG);
        }
        Ok(Self { names, g })
    }

    /// `Z^rank` on generators `g, h, k, …` with `g` the first generator.
    pub fn standard(rank: usize) -> Result<Self, GroupError> {
        const NAMES: [&str; 8] = ["g", "h", "k", "l", "m", "p", "r", "s"];
        if rank == 0 {
            return Err(GroupError::ZeroRank);
        }
        let names = (0..rank)
            .map(|i| NAMES.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("h{i}")))
            .collect();
        let mut g = vec![0; rank];
        g[0] = 1;
        Self::new(names, g)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn g(&self) -> &Exponents {
        &self.g
    }

    pub fn identity(&self) -> Exponents {
        vec![0; self.rank()]
    }

    pub fn unit(&self, i: usize) -> Exponents {
        let mut e = self.identity();
        e[i] = 1;
        e
    }

    /// Index of `g` when it is a basis vector `e_i`.
    pub fn g_generator(&self) -> Option<usize> {
        let nonzero: Vec<_> = self.g.iter().enumerate().filter(|(_, &e)| e != 0).collect();
        match nonzero.as_slice() {
            [(i, 1)] => Some(*i),
            _ => None,
        }
    }

    fn check(&self, h: &[i64]) -> Result<(), GroupError> {
        if h.len() != self.rank() {
            return Err(GroupError::RankMismatch { expected: self.rank(), got: h.len() });
        }
        Ok(())
    }
}

pub fn add(h: &[i64], k: &[i64]) -> Exponents {
    h.iter().zip(k).map(|(a, b)| a + b).collect()
}

pub fn negate(h: &[i64]) -> Exponents {
    h.iter().map(|a| -a).collect()
}

/// Multiplicative character `G → k^×`, given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<Scalar>,
}

impl Character {
    pub fn new(values: Vec<Scalar>) -> Result<Self, GroupError> {
        if let Some(i) = values.iter().position(Zero::is_zero) {
            return Err(GroupError::ZeroCharacter(i));
        }
        Ok(Self { values })
    }

    /// The counit `ε`.
    pub fn trivial(rank: usize) -> Self {
        Self { values: vec![Scalar::one(); rank] }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(One::is_one)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }
}

/// `∏ χ(genᵢ)^{eᵢ}`.
pub fn eval_character(chi: &Character, h: &[i64]) -> Scalar {
    chi.values.iter().zip(h).fold(Scalar::one(), |acc, (c, &e)| acc * pow(c, e))
}

/// `η ∈ Der_{χ,χ}(kG, k)`: `η(ht) = χ(h)η(t) + χ(t)η(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedDerivation {
    chi: Character,
    values: Vec<Scalar>,
}

impl TwistedDerivation {
    pub fn new(chi: Character, values: Vec<Scalar>) -> Result<Self, GroupError> {
        if values.len() != chi.rank() {
            return Err(GroupError::RankMismatch { expected: chi.rank(), got: values.len() });
        }
        Ok(Self { chi, values })
    }

    /// An `ε`-derivation, i.e. a homomorphism `G → (k, +)`.
    pub fn additive(values: Vec<Scalar>) -> Self {
        let chi = Character::trivial(values.len());
        Self { chi, values }
    }

    pub fn zero(rank: usize) -> Self {
        Self::additive(vec![Scalar::zero(); rank])
    }

    pub fn chi(&self) -> &Character {
        &self.chi
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// Evaluates `η(h)` by folding the twisted Leibniz rule over generator
/// powers; on a power, `η(x^e) = e·χ(x)^{e-1}·η(x)`.
pub fn eval_derivation(eta: &TwistedDerivation, h: &[i64]) -> Scalar {
    let mut chi_acc = Scalar::one();
    let mut eta_acc = Scalar::zero();
    for ((c, v), &e) in eta.chi.values.iter().zip(&eta.values).zip(h) {
        if e == 0 {
            continue;
        }
        let chi_part = pow(c, e);
        let eta_part = Scalar::from_integer(e.into()) * pow(c, e - 1) * v;
        eta_acc = &chi_acc * &eta_part + &chi_part * &eta_acc;
        chi_acc *= chi_part;
    }
    eta_acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiMode {
    /// `ζ = 0`; ξ is itself additive.
    CaseA,
    /// `ζ = η` and `ξ(h) = ½(η(h)² − η(h))`.
    CaseBCanonical,
    /// Arbitrary generator values with `ζ = c·η`.
    General,
}

/// A map `ξ: G → k` with `ξ(hk) = ξ(h) + ζ(h)η(k) + ξ(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiMap {
    zeta: TwistedDerivation,
    eta: TwistedDerivation,
    values: Vec<Scalar>,
    mode: XiMode,
    /// `ζ = ratio·η`, used by the closed form.
    ratio: Scalar,
}

impl XiMap {
    pub fn case_a(eta: TwistedDerivation, values: Vec<Scalar>) -> Result<Self, GroupError> {
        let zeta = TwistedDerivation::zero(eta.values.len());
        let mut xi = Self::general(zeta, eta, values)?;
        xi.mode = XiMode::CaseA;
        Ok(xi)
    }

    pub fn case_b_canonical(eta: TwistedDerivation) -> Self {
        let values = eta.values.iter().map(|v| half() * (v * v - v)).collect();
        Self { zeta: eta.clone(), eta, values, mode: XiMode::CaseBCanonical, ratio: Scalar::one() }
    }

    /// Generator values for an arbitrary pair `(ζ, η)`. On an abelian group
    /// the cocycle law forces `ζ(h)η(k) = ζ(k)η(h)`.
    pub fn general(zeta: TwistedDerivation, eta: TwistedDerivation, values: Vec<Scalar>) -> Result<Self, GroupError> {
        let n = eta.values.len();
        if zeta.values.len() != n || values.len() != n {
            return Err(GroupError::RankMismatch { expected: n, got: values.len().min(zeta.values.len()) });
        }
        if !zeta.chi.is_trivial() || !eta.chi.is_trivial() {
            return Err(GroupError::InconsistentXi("ζ and η must be ε-derivations".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if &zeta.values[i] * &eta.values[j] != &zeta.values[j] * &eta.values[i] {
                    return Err(GroupError::InconsistentXi(format!("ζ(x{i})η(x{j}) ≠ ζ(x{j})η(x{i})")));
                }
            }
        }
        let ratio = match eta.values.iter().position(|v| !v.is_zero()) {
            Some(i) => &zeta.values[i] / &eta.values[i],
            None => Scalar::zero(),
        };
        Ok(Self { zeta, eta, values, mode: XiMode::General, ratio })
    }

    pub fn mode(&self) -> XiMode {
        self.mode
    }

    pub fn zeta(&self) -> &TwistedDerivation {
        &self.zeta
    }

    pub fn eta(&self) -> &TwistedDerivation {
        &self.eta
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// `ξ(h)`. The shift `ξ − (c/2)η²` is additive when `ζ = c·η`, which gives
/// a closed form valid in every mode.
pub fn eval_xi(xi: &XiMap, h: &[i64]) -> Scalar {
    let eta_h = eval_derivation(&xi.eta, h);
    let c = &xi.ratio;
    let mut acc = c * &eta_h * &eta_h * half();
    for ((v, eta_i), &e) in xi.values.iter().zip(&xi.eta.values).zip(h) {
        let shift = v - c * eta_i * eta_i * half();
        acc += shift * Scalar::from_integer(e.into());
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TripleKind {
    Jordanian,
    NonJordanian,
    Invalid(String),
}

/// `(g, χ, η)` with `η(g) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDTriple {
    group: GroupSpec,
    eta: TwistedDerivation,
}

impl YDTriple {
    pub fn new(group: GroupSpec, eta: TwistedDerivation) -> Result<Self, GroupError> {
        if eta.values.len() != group.rank() {
            return Err(GroupError::RankMismatch { expected: group.rank(), got: eta.values.len() });
        }
        Ok(Self { group, eta })
    }

    /// `χ = ε` over `Z^rank` with `η` given on generators (`η(g)` first).
    pub fn trivial_character(rank: usize, eta: Vec<Scalar>) -> Result<Self, GroupError> {
        Self::new(GroupSpec::standard(rank)?, TwistedDerivation::additive(eta))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn chi(&self) -> &Character {
        &self.eta.chi
    }

    pub fn eta(&self) -> &TwistedDerivation {
        &self.eta
    }

    pub fn eta_at(&self, h: &[i64]) -> Result<Scalar, GroupError> {
        self.group.check(h)?;
        Ok(eval_derivation(&self.eta, h))
    }
}

pub fn validate_yd_triple(d: &YDTriple) -> TripleKind {
    let g = d.group.g();
    if !eval_derivation(&d.eta, g).is_one() {
        return TripleKind::Invalid("η(g) ≠ 1".into());
    }
    if eval_character(&d.eta.chi, g).is_one() {
        TripleKind::Jordanian
    } else {
        TripleKind::NonJordanian
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};
    use proptest::prelude::*;

    #[test]
    fn character_values() {
        let eps = Character::trivial(2);
        assert_eq!(eval_character(&eps, &[3, -7]), int(1));
        let chi = Character::new(vec![int(2)]).unwrap();
        assert_eq!(eval_character(&chi, &[3]), int(8));
        assert_eq!(eval_character(&chi, &[-1]), q(1, 2));
        assert!(Character::new(vec![int(0)]).is_err());
    }

    #[test]
    fn derivation_values() {
        let eta = TwistedDerivation::additive(vec![int(1)]);
        assert_eq!(eval_derivation(&eta, &[0]), int(0));
        assert_eq!(eval_derivation(&eta, &[5]), int(5));
        let chi = Character::new(vec![int(2)]).unwrap();
        let eta = TwistedDerivation::new(chi, vec![int(1)]).unwrap();
        // η(x²) = χ(x)η(x) + χ(x)η(x) = 4
        assert_eq!(eval_derivation(&eta, &[2]), int(4));
    }

    /// Oracle: η = χ·ψ with ψ additive, ψ(x) = η(x)/χ(x).
    fn eta_oracle(chi: &[Scalar], eta: &[Scalar], h: &[i64]) -> Scalar {
        let psi: Scalar = chi.iter().zip(eta).zip(h).map(|((c, v), &e)| v / c * Scalar::from_integer(e.into())).sum();
        let chi_h = chi.iter().zip(h).fold(Scalar::one(), |acc, (c, &e)| acc * pow(c, e));
        chi_h * psi
    }

    #[test]
    fn xi_values() {
        let eta = TwistedDerivation::additive(vec![int(1), int(3)]);
        let xi = XiMap::case_b_canonical(eta.clone());
        assert_eq!(eval_xi(&xi, &[0, 0]), int(0));
        assert_eq!(eval_xi(&xi, &[0, 1]), int(3));
        assert_eq!(eval_xi(&xi, &[1, 0]), int(0));
        // η(h)=2, η(k)=5: ξ(hk) - ξ(h) - η(h)η(k) - ξ(k) = 21 - 1 - 10 - 10
        let eta = TwistedDerivation::additive(vec![int(2), int(5)]);
        let xi = XiMap::case_b_canonical(eta);
        assert_eq!(eval_xi(&xi, &[1, 1]), int(21));
        assert_eq!(eval_xi(&xi, &[1, 0]), int(1));
        assert_eq!(eval_xi(&xi, &[0, 1]), int(10));
    }

    #[test]
    fn inconsistent_xi_is_rejected() {
        let zeta = TwistedDerivation::additive(vec![int(1), int(0)]);
        let eta = TwistedDerivation::additive(vec![int(0), int(1)]);
        let err = XiMap::general(zeta, eta, vec![int(0), int(0)]);
        assert!(matches!(err, Err(GroupError::InconsistentXi(_))));
    }

    #[test]
    fn triple_validation() {
        let d = YDTriple::trivial_character(1, vec![int(1)]).unwrap();
        assert_eq!(validate_yd_triple(&d), TripleKind::Jordanian);
        let d = YDTriple::trivial_character(1, vec![int(0)]).unwrap();
        assert_eq!(validate_yd_triple(&d), TripleKind::Invalid("η(g) ≠ 1".into()));
        let chi = Character::new(vec![int(2)]).unwrap();
        let eta = TwistedDerivation::new(chi, vec![int(1)]).unwrap();
        let d = YDTriple::new(GroupSpec::standard(1).unwrap(), eta).unwrap();
        assert_eq!(validate_yd_triple(&d), TripleKind::NonJordanian);
    }

    #[test]
    fn group_spec_invariants() {
        assert!(matches!(GroupSpec::new(vec!["g".into()], vec![0]), Err(GroupError::TrivialG)));
        assert!(matches!(GroupSpec::standard(0), Err(GroupError::ZeroRank)));
        let g = GroupSpec::standard(2).unwrap();
        assert_eq!(g.names(), &["g".to_string(), "h".to_string()]);
        assert_eq!(g.g_generator(), Some(0));
    }

    fn small() -> impl Strategy<Value = Scalar> {
        (-9i64..=9, 1i64..=5).prop_map(|(n, d)| q(n, d))
    }

    fn nonzero() -> impl Strategy<Value = Scalar> {
        (1i64..=4, 1i64..=3, any::<bool>()).prop_map(|(n, d, s)| q(if s { n } else { -n }, d))
    }

    fn vecs() -> impl Strategy<Value = (Vec<i64>, Vec<i64>)> {
        (prop::collection::vec(-4i64..=4, 3), prop::collection::vec(-4i64..=4, 3))
    }

    proptest! {
        #[test]
        fn eps_derivation_is_homomorphism(vals in prop::collection::vec(small(), 3), (h, k) in vecs()) {
            let eta = TwistedDerivation::additive(vals);
            prop_assert_eq!(eval_derivation(&eta, &add(&h, &k)), eval_derivation(&eta, &h) + eval_derivation(&eta, &k));
        }

        #[test]
        fn twisted_leibniz(chi in prop::collection::vec(nonzero(), 3), vals in prop::collection::vec(small(), 3), (h, k) in vecs()) {
            let chi_c = Character::new(chi.clone()).unwrap();
            let eta = TwistedDerivation::new(chi_c.clone(), vals.clone()).unwrap();
            let lhs = eval_derivation(&eta, &add(&h, &k));
            let rhs = eval_character(&chi_c, &h) * eval_derivation(&eta, &k) + eval_character(&chi_c, &k) * eval_derivation(&eta, &h);
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(lhs, eta_oracle(&chi, &vals, &add(&h, &k)));
        }

        #[test]
        fn xi_cocycle_both_modes(eta in prop::collection::vec(small(), 3), xs in prop::collection::vec(small(), 3), (h, k) in vecs()) {
            let eta = TwistedDerivation::additive(eta);
            for xi in [XiMap::case_a(eta.clone(), xs.clone()).unwrap(), XiMap::case_b_canonical(eta.clone())] {
                let zeta_h = eval_derivation(xi.zeta(), &h);
                let lhs = eval_xi(&xi, &add(&h, &k));
                let rhs = eval_xi(&xi, &h) + zeta_h * eval_derivation(&eta, &k) + eval_xi(&xi, &k);
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn zeta_is_eta_times_zeta_g(mut eta in prop::collection::vec(small(), 3), h in prop::collection::vec(-5i64..=5, 3)) {
            eta[0] = Scalar::one();
            let xi = XiMap::case_b_canonical(TwistedDerivation::additive(eta));
            let g = vec![1, 0, 0];
            let zeta_h = eval_derivation(xi.zeta(), &h);
            prop_assert_eq!(zeta_h, eval_derivation(xi.eta(), &h) * eval_derivation(xi.zeta(), &g));
        }
    }
}
