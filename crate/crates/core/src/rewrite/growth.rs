use super::RewriteError;

pub const MIN_POINTS: usize = 8;

/// Growth exponent from cumulative counts `c[0..=N]`.
///
/// Least-squares slope of `ln c[n]` against `ln(n + 1)` over the top half
/// of the range. The shift by one puts the constant term of a polynomial
/// count on the same footing as the leading one and removes most of the
/// finite-size bias of a plain `ln n` fit.
pub fn gk_estimate(cumulative: &[u128]) -> Result<f64, RewriteError> {
    if cumulative.len() < MIN_POINTS {
        return Err(RewriteError::InsufficientData { have: cumulative.len(), need: MIN_POINTS });
    }
    let start = cumulative.len() / 2;
    let pts: Vec<(f64, f64)> = (start..cumulative.len())
        .filter(|&n| cumulative[n] > 0)
        .map(|n| (((n + 1) as f64).ln(), (cumulative[n] as f64).ln()))
        .collect();
    if pts.len() < 2 {
        return Err(RewriteError::InsufficientData { have: pts.len(), need: 2 });
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cum(f: impl Fn(u128) -> u128, n: u128) -> Vec<u128> {
        (0..=n).map(f).collect()
    }

    #[test]
    fn known_growth_rates() {
        let z = gk_estimate(&cum(|n| 2 * n + 1, 40)).unwrap();
        assert!((z - 1.0).abs() < 0.15, "{z}");
        let jp = gk_estimate(&cum(|n| (n + 1) * (n + 2) / 2, 40)).unwrap();
        assert!((jp - 2.0).abs() < 0.15, "{jp}");
        let cube = gk_estimate(&cum(|n| (n + 1).pow(3), 40)).unwrap();
        assert!((cube - 3.0).abs() < 1e-9, "{cube}");
    }

    #[test]
    fn needs_eight_points() {
        assert!(matches!(gk_estimate(&[1, 2, 3]), Err(RewriteError::InsufficientData { .. })));
        assert!(gk_estimate(&[1; 8]).is_ok());
    }
}
