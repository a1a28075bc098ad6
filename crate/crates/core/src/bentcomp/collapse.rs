use rayon::prelude::*;
use serde::Serialize;

use super::{bent_alphas, check_sweep};
use crate::error::Result;
use crate::gf2n::{Elem, FieldCtx};
use crate::weights::{exponent_profile, pi_d};

/// Weight profile of an exponent admitting a bent monomial, with Π_d over
/// every bent-giving α.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseRow {
    pub n: u32,
    pub d: u64,
    pub min_v: u32,
    pub j_set_size: usize,
    pub all_jd_zero: bool,
    pub bent_alphas: usize,
    /// Distinct values of Π_d(α) over the bent-giving α, ascending.
    pub pi_values: Vec<Elem>,
    /// If min_v = k: every minimiser annihilates d and Π_d(α) = 1.
    /// If min_v < k: Π_d(α) = 0.
    pub holds: bool,
}

/// One row per exponent 0 < d < 2^n − 1 for which some Tr(α x^d) is bent.
pub fn condition_collapse(ctx: &FieldCtx) -> Result<Vec<CollapseRow>> {
    check_sweep(ctx)?;
    let n = ctx.n();
    let k = n / 2;
    let rows: Vec<Option<CollapseRow>> = (1..ctx.group_order())
        .into_par_iter()
        .map(|d| {
            let alphas = bent_alphas(ctx, d)?;
            if alphas.is_empty() {
                return Ok(None);
            }
            let profile = exponent_profile(d, n)?;
            let mut pi_values = alphas
                .iter()
                .map(|&a| pi_d(ctx, &profile, a))
                .collect::<Result<Vec<_>>>()?;
            pi_values.sort_unstable();
            pi_values.dedup();
            let holds = if profile.min_v == k {
                profile.all_jd_zero && pi_values == [1]
            } else {
                profile.min_v < k && pi_values == [0]
            };
            Ok(Some(CollapseRow {
                n,
                d,
                min_v: profile.min_v,
                j_set_size: profile.j_set.len(),
                all_jd_zero: profile.all_jd_zero,
                bent_alphas: alphas.len(),
                pi_values,
                holds,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(rows.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapse_at_n4() {
        let ctx = FieldCtx::new(4).unwrap();
        let rows = condition_collapse(&ctx).unwrap();
        assert!(rows.iter().any(|r| r.d == 3));
        assert!(rows.iter().all(|r| r.holds), "{rows:?}");
    }
}
