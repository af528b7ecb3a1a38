//! Built-in families addressed as `family:NAME` with `k=v` parameters.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::families::{
    jordanian_triple, make_example_indecomposable, make_free_u, make_group_algebra, make_jordan_plane, make_ohn,
    make_u_xi, make_ujor_d, make_ujor_free_stage, make_ujor_lambda, make_wujor, AlgebraPresentation,
};
use crate::groupdata::{XiMap, YDTriple};
use crate::scalar::{int, parse_scalar, Scalar};

use super::CliError;

pub const FAMILY_NAMES: &[&str] = &[
    "wujor",
    "u",
    "free_u",
    "u_xi",
    "ujor_d",
    "free_stage",
    "ohn",
    "jordan_plane",
    "indecomposable",
    "group_algebra",
];

struct Params<'a> {
    raw: &'a BTreeMap<String, String>,
    used: Vec<&'static str>,
}

impl Params<'_> {
    fn scalar(&mut self, key: &'static str, default: Scalar) -> Result<Scalar, CliError> {
        self.used.push(key);
        match self.raw.get(key) {
            None => Ok(default),
            Some(v) => parse_scalar(v).ok_or_else(|| CliError::Usage(format!("--param {key}: bad rational `{v}`"))),
        }
    }

    fn list(&mut self, key: &'static str, default: Vec<Scalar>) -> Result<Vec<Scalar>, CliError> {
        self.used.push(key);
        match self.raw.get(key) {
            None => Ok(default),
            Some(v) => v
                .split(',')
                .map(|s| parse_scalar(s).ok_or_else(|| CliError::Usage(format!("--param {key}: bad rational `{s}`"))))
                .collect(),
        }
    }

    fn finish(self) -> Result<(), CliError> {
        for k in self.raw.keys() {
            if !self.used.contains(&k.as_str()) {
                return Err(CliError::Usage(format!("unknown parameter `{k}` for this family")));
            }
        }
        Ok(())
    }
}

/// Builds a named family. `eta` lists are values on all generators
/// (`g` first, so the first entry must be 1).
pub fn build_family(name: &str, raw: &BTreeMap<String, String>) -> Result<AlgebraPresentation, CliError> {
    let mut ps = Params { raw, used: Vec::new() };
    let p = match name {
        "wujor" => make_wujor(),
        "u" => make_ujor_lambda(ps.scalar("lambda", Scalar::zero())?),
        "free_u" => make_free_u(),
        "u_xi" => {
            let eta = ps.list("eta", vec![int(1)])?;
            let xi = ps.list("xi", vec![Scalar::zero(); eta.len()])?;
            let lambda = ps.scalar("lambda", Scalar::zero())?;
            let d = YDTriple::trivial_character(eta.len(), eta).map_err(|e| CliError::Usage(e.to_string()))?;
            let x = XiMap::case_a(d.eta().clone(), xi).map_err(|e| CliError::Usage(e.to_string()))?;
            make_u_xi(&d, &x, lambda)?
        }
        "ujor_d" => {
            let eta = ps.list("eta", vec![int(1)])?;
            let rest = eta.get(1..).unwrap_or(&[]).to_vec();
            if eta.first() != Some(&int(1)) {
                return Err(CliError::Usage("eta(g) must be 1".into()));
            }
            make_ujor_d(&jordanian_triple(&rest)?)?
        }
        "free_stage" => make_ujor_free_stage(ps.scalar("eta_h", int(3))?, ps.scalar("r", int(3))?)?,
        "ohn" => make_ohn(ps.scalar("hbar", int(1))?)?,
        "jordan_plane" => make_jordan_plane(),
        "indecomposable" => make_example_indecomposable(),
        "group_algebra" => {
            let r = ps.scalar("rank", int(1))?;
            let rank = usize::try_from(r.to_integer()).ok().filter(|_| r.is_integer()).ok_or_else(|| {
                CliError::Usage("rank must be a positive integer".into())
            })?;
            make_group_algebra(rank)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown family `{other}`; known: {}",
                FAMILY_NAMES.join(", ")
            )))
        }
    };
    ps.finish()?;
    Ok(p)
}
