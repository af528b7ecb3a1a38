use crate::ncpoly::{Letter, NCPolynomial};
use crate::rewrite::{ConfluenceCertificate, RewriteSystem};
use crate::scalar::{half, int, q, Scalar};

use super::{AlgebraPresentation, FamilyError};

/// Two-step Ore tower `R[x1; δ1][x2; σ, δ2]` over a Laurent ring `R`
/// generated by group letters, with every map given on generators as an
/// element of the ambient presentation.
///
/// Generator indices: `0..base.len()` are the base letters, `base.len()`
/// is `x1`.
#[derive(Clone, Debug)]
pub struct OreTower {
    pub base: Vec<Letter>,
    pub x1: NCPolynomial,
    pub delta1: Vec<NCPolynomial>,
    pub x2: NCPolynomial,
    pub sigma: Vec<NCPolynomial>,
    pub delta2: Vec<NCPolynomial>,
}

/// An identity of the tower that does not reduce to zero.
#[derive(Clone, Debug)]
pub struct OreFailure {
    pub identity: String,
    pub residue: NCPolynomial,
}

/// `δ(s⁻¹) = −σ(s⁻¹)·δ(s)·s⁻¹` for a σ-derivation.
fn inverse_value(sigma_inv: &NCPolynomial, delta: &NCPolynomial, inv: Letter) -> NCPolynomial {
    -&sigma_inv.nc_mul(delta).nc_mul(&NCPolynomial::letter(inv))
}

impl OreTower {
    /// `k[g^{±1}][a1; δ1][a2; σ, δ2]` with `δ1(g) = g² − g`, `δ2(g) = −a1g`,
    /// `δ2(a1) = ½a1(1 − a1)`, `σ(g) = g`, `σ(a1) = a1 + 1`.
    pub fn ujor(p: &AlgebraPresentation) -> Self {
        let (g, gi) = p.group[0];
        let a1 = p.var("a1");
        let a2 = p.var("a2");
        let gp = NCPolynomial::letter(g);
        let gip = NCPolynomial::letter(gi);
        let unit = NCPolynomial::one();
        let d1g = &gp.nc_mul(&gp) - &gp;
        let d1gi = inverse_value(&gip, &d1g, gi);
        let d2g = -&a1.nc_mul(&gp);
        let d2gi = inverse_value(&gip, &d2g, gi);
        let d2a1 = &half() * &a1.nc_mul(&(&unit - &a1));
        Self {
            base: vec![g, gi],
            x1: a1.clone(),
            delta1: vec![d1g, d1gi],
            x2: a2,
            sigma: vec![gp, gip, &a1 + &unit],
            delta2: vec![d2g, d2gi, d2a1],
        }
    }

    /// `k[T^{±1}][x; δ][y; σ, D]` with `x = KT⁻¹`, `y = YT⁻¹`,
    /// `δ(T) = T − T⁻¹`, `σ(x) = x + 2`, `D(T) = −ħTx − ħ/2(T − T⁻¹)` and
    /// `D(x) = ħx² − ħ/4(1 − T⁻⁴)`.
    pub fn ohn(p: &AlgebraPresentation, hbar: &Scalar) -> Self {
        let (t, ti) = p.group[0];
        let tp = NCPolynomial::letter(t);
        let tip = NCPolynomial::letter(ti);
        let unit = NCPolynomial::one();
        let x = p.var("K").nc_mul(&tip);
        let y = p.var("Y").nc_mul(&tip);
        let t_minus = &tp - &tip;
        let d1t = t_minus.clone();
        let d1ti = inverse_value(&tip, &d1t, ti);
        let mut d2t = &(-hbar) * &tp.nc_mul(&x);
        d2t.add_scaled(&t_minus, &(-hbar * half()));
        let d2ti = inverse_value(&tip, &d2t, ti);
        let mut d2x = hbar * &x.nc_mul(&x);
        d2x.add_scaled(&(&unit - &tip.pow(4)), &(-hbar * q(1, 4)));
        let mut sx = x.clone();
        sx.add_scaled(&unit, &int(2));
        Self {
            base: vec![t, ti],
            x1: x,
            delta1: vec![d1t, d1ti],
            x2: y,
            sigma: vec![tp, tip, sx],
            delta2: vec![d2t, d2ti, d2x],
        }
    }

    fn gen(&self, i: usize) -> NCPolynomial {
        if i < self.base.len() {
            NCPolynomial::letter(self.base[i])
        } else {
            self.x1.clone()
        }
    }

    fn product(&self, seq: &[usize]) -> NCPolynomial {
        seq.iter().fold(NCPolynomial::one(), |acc, &i| acc.nc_mul(&self.gen(i)))
    }

    fn sigma_of(&self, seq: &[usize]) -> NCPolynomial {
        seq.iter().fold(NCPolynomial::one(), |acc, &i| acc.nc_mul(&self.sigma[i]))
    }

    /// σ-Leibniz: `δ(st) = δ(s)t + σ(s)δ(t)`.
    fn delta2_of(&self, seq: &[usize]) -> NCPolynomial {
        match seq.split_first() {
            None => NCPolynomial::zero(),
            Some((&i, rest)) => {
                &self.delta2[i].nc_mul(&self.product(rest)) + &self.sigma[i].nc_mul(&self.delta2_of(rest))
            }
        }
    }

    fn delta1_of(&self, seq: &[usize]) -> NCPolynomial {
        match seq.split_first() {
            None => NCPolynomial::zero(),
            Some((&i, rest)) => &self.delta1[i].nc_mul(&self.product(rest)) + &self.gen(i).nc_mul(&self.delta1_of(rest)),
        }
    }

    /// Index sequences for the words of a base-ring polynomial, with
    /// coefficients. `None` if a letter lies outside the base.
    fn base_words(&self, p: &NCPolynomial) -> Option<Vec<(Vec<usize>, Scalar)>> {
        p.terms()
            .map(|(w, c)| {
                let seq = w.letters().iter().map(|l| self.base.iter().position(|b| b == l)).collect::<Option<Vec<_>>>()?;
                Some((seq, c.clone()))
            })
            .collect()
    }

    fn on_base_poly(&self, p: &NCPolynomial, f: impl Fn(&[usize]) -> NCPolynomial) -> Option<NCPolynomial> {
        let mut out = NCPolynomial::zero();
        for (seq, c) in self.base_words(p)? {
            out.add_scaled(&f(&seq), &c);
        }
        Some(out)
    }
}

/// Checks, in the quotient presented by `sys`:
/// the defining identities `x1 s = s x1 + δ1(s)` and
/// `x2 t = σ(t) x2 + δ2(t)` on generators, their multiplicative and
/// (σ-)Leibniz extensions to products of up to three generators, and that
/// `σ`, `δ2` kill the first Ore relation.
pub fn verify_ore_tower(
    tower: &OreTower,
    sys: &RewriteSystem,
    cert: &ConfluenceCertificate,
) -> Result<Vec<OreFailure>, FamilyError> {
    if !cert.covers(4) {
        return Err(FamilyError::NotConfluent(4));
    }
    let nb = tower.base.len();
    let mut fails = Vec::new();
    let mut expect_zero = |label: String, p: NCPolynomial| -> Result<(), FamilyError> {
        let r = sys.normal_form(&p)?;
        if !r.is_zero() {
            fails.push(OreFailure { identity: label, residue: r });
        }
        Ok(())
    };
    let all: Vec<usize> = (0..=nb).collect();
    let base: Vec<usize> = (0..nb).collect();
    for len in 1..=3 {
        for seq in sequences(&base, len) {
            let p = tower.product(&seq);
            let lhs = &tower.x1.nc_mul(&p) - &p.nc_mul(&tower.x1);
            expect_zero(format!("x1 commutation on {seq:?}"), &lhs - &tower.delta1_of(&seq))?;
        }
        for seq in sequences(&all, len) {
            let p = tower.product(&seq);
            let lhs = &tower.x2.nc_mul(&p) - &tower.sigma_of(&seq).nc_mul(&tower.x2);
            expect_zero(format!("x2 commutation on {seq:?}"), &lhs - &tower.delta2_of(&seq))?;
        }
    }
    for s in 0..nb {
        let d1 = &tower.delta1[s];
        let sig_d1 = tower
            .on_base_poly(d1, |w| tower.sigma_of(w))
            .ok_or_else(|| FamilyError::BadOreData("δ1 leaves the base ring".into()))?;
        let rel_sigma = &(&tower.sigma[nb].nc_mul(&tower.sigma[s]) - &tower.sigma[s].nc_mul(&tower.sigma[nb])) - &sig_d1;
        expect_zero(format!("sigma respects x1 relation at {s}"), rel_sigma)?;
        let del_d1 = tower
            .on_base_poly(d1, |w| tower.delta2_of(w))
            .ok_or_else(|| FamilyError::BadOreData("δ1 leaves the base ring".into()))?;
        let rel_delta = &(&tower.delta2_of(&[nb, s]) - &tower.delta2_of(&[s, nb])) - &del_d1;
        expect_zero(format!("delta2 respects x1 relation at {s}"), rel_delta)?;
    }
    Ok(fails)
}

fn sequences(alphabet: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                alphabet.iter().map(move |&i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}
