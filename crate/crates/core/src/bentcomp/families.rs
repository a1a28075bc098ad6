//! The five known classes of monomial bent functions Tr(α x^d) over GF(2^n),
//! n = 2k:
//!
//! | family  | exponent                       | side conditions                                     |
//! |---------|--------------------------------|-----------------------------------------------------|
//! | Gold    | 2^t + 1                        | n / gcd(n, t) even, α not a d-th power              |
//! | Dillon  | r (2^k − 1)                    | gcd(r, 2^k + 1) = 1, α ∈ GF(2^k)*, K(α) = −1        |
//! | Kasami  | 2^(2t) − 2^t + 1               | gcd(t, n) = 1, α not a cube                         |
//! | Leander | (2^t + 1)^2                    | n = 4t, t odd, α ∈ γ GF(2^t)*, γ ∈ GF(4) \ GF(2)    |
//! | CCK     | 2^(2t) + 2^t + 1               | n = 6t, t > 1, α ∈ GF(2^(3t))*, Tr_t^(3t)(α) = 0    |
//!
//! Kasami exponents are reduced modulo 2^n − 1, which leaves x^d unchanged as
//! a function; a residue of 0 is skipped.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfun::{is_bent, monomial};
use crate::error::{Error, Result};
use crate::gf2n::{gcd, Elem, FieldCtx, SubfieldEmbedding};
use crate::kloosterman::kloosterman_sums;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gold,
    Dillon,
    Kasami,
    Leander,
    Cck,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Gold,
        Family::Dillon,
        Family::Kasami,
        Family::Leander,
        Family::Cck,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gold => "gold",
            Family::Dillon => "dillon",
            Family::Kasami => "kasami",
            Family::Leander => "leander",
            Family::Cck => "cck",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family `{s}`")))
    }
}

/// One admissible pair. `param` is t for Gold, Kasami, Leander and CCK and
/// r for Dillon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub family: Family,
    pub param: u64,
    pub d: u64,
    pub alpha: Elem,
}

struct DillonData {
    embedding: SubfieldEmbedding,
    sums: Vec<i64>,
}

/// Family predicates over one field, with the Kloosterman table for the
/// Dillon condition computed once.
pub struct FamilyContext<'a> {
    ctx: &'a FieldCtx,
    dillon: DillonData,
    /// A primitive cube root of unity.
    omega: Elem,
}

impl<'a> FamilyContext<'a> {
    pub fn new(ctx: &'a FieldCtx) -> Result<Self> {
        let n = ctx.n();
        if n == 0 || n % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "monomial bent families need an even degree, got {n}"
            )));
        }
        let small = FieldCtx::new(n / 2)?;
        let embedding = SubfieldEmbedding::new(&small, ctx)?;
        let sums = kloosterman_sums(&small);
        Ok(FamilyContext {
            ctx,
            dillon: DillonData { embedding, sums },
            omega: ctx.exp(ctx.group_order() / 3),
        })
    }

    pub fn field(&self) -> &FieldCtx {
        self.ctx
    }

    /// (param, d) pairs of the family at this n, ascending in param; empty
    /// when the family does not exist here.
    pub fn exponents(&self, family: Family) -> Vec<(u64, u64)> {
        let n = self.ctx.n();
        let k = n / 2;
        let g = self.ctx.group_order();
        let n64 = u64::from(n);
        let mut out: Vec<(u64, u64)> = match family {
            Family::Gold => (1..n64)
                .filter(|&t| (n64 / gcd(n64, t)) % 2 == 0)
                .map(|t| (t, (1u64 << t) + 1))
                .filter(|&(_, d)| d < g)
                .collect(),
            Family::Dillon => {
                let q = (1u64 << k) + 1;
                (1..q)
                    .filter(|&r| gcd(r, q) == 1)
                    .map(|r| (r, r * ((1u64 << k) - 1)))
                    .collect()
            }
            Family::Kasami => (1..n64)
                .filter(|&t| gcd(t, n64) == 1)
                .map(|t| {
                    let d = ((1u128 << (2 * t)) - (1u128 << t) + 1) % u128::from(g);
                    (t, d as u64)
                })
                .filter(|&(_, d)| d != 0)
                .collect(),
            Family::Leander => {
                if n % 4 == 0 && (n / 4) % 2 == 1 {
                    let t = u64::from(n / 4);
                    let b = (1u64 << t) + 1;
                    vec![(t, (b * b) % g)]
                } else {
                    Vec::new()
                }
            }
            Family::Cck => {
                if n % 6 == 0 && n / 6 > 1 {
                    let t = u64::from(n / 6);
                    vec![(t, (1u64 << (2 * t)) + (1u64 << t) + 1)]
                } else {
                    Vec::new()
                }
            }
        };
        out.retain(|&(_, d)| d > 0 && d < g);
        out
    }

    /// The side condition on α for a given family parameter.
    fn alpha_ok(&self, family: Family, param: u64, d: u64, alpha: Elem) -> bool {
        let ctx = self.ctx;
        if alpha == 0 {
            return false;
        }
        match family {
            Family::Gold => !ctx.is_dth_power(alpha, d),
            Family::Kasami => !ctx.is_dth_power(alpha, 3),
            Family::Dillon => {
                match self.dillon.embedding.preimage(alpha) {
                    Some(a) => self.dillon.sums[a as usize] == -1,
                    None => false,
                }
            }
            Family::Leander => {
                let t = param as u32;
                let w = self.omega;
                [w, ctx.square(w)].into_iter().any(|gamma| {
                    let beta = ctx.mul(alpha, ctx.inv(gamma).expect("gamma is nonzero"));
                    ctx.in_subfield(t, beta)
                })
            }
            Family::Cck => {
                let t = param as u32;
                ctx.in_subfield(3 * t, alpha)
                    && ctx.subfield_trace(3 * t, t, alpha) == Ok(0)
            }
        }
    }

    pub fn predicate(&self, family: Family, d: u64, alpha: Elem) -> bool {
        self.exponents(family)
            .into_iter()
            .any(|(p, e)| e == d && self.alpha_ok(family, p, d, alpha))
    }

    /// Every admissible (d, α), ordered by parameter then α. A d reachable
    /// from several parameters is listed once, under the smallest.
    pub fn enumerate(&self, family: Family) -> Vec<FamilyMember> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for (param, d) in self.exponents(family) {
            if seen.contains(&d) {
                continue;
            }
            seen.push(d);
            out.extend(
                (1..self.ctx.size() as Elem)
                    .filter(|&a| self.alpha_ok(family, param, d, a))
                    .map(|alpha| FamilyMember {
                        family,
                        param,
                        d,
                        alpha,
                    }),
            );
        }
        out
    }
}

pub fn family_predicate(family: Family, ctx: &FieldCtx, d: u64, alpha: Elem) -> Result<bool> {
    Ok(FamilyContext::new(ctx)?.predicate(family, d, alpha))
}

pub fn family_enumerate(ctx: &FieldCtx, family: Family) -> Result<Vec<FamilyMember>> {
    Ok(FamilyContext::new(ctx)?.enumerate(family))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    #[serde(flatten)]
    pub member: FamilyMember,
    pub bent: bool,
}

/// Walsh-checks every enumerated member of the given families.
pub fn verify_families(ctx: &FieldCtx, families: &[Family]) -> Result<Vec<FamilyCheck>> {
    let fc = FamilyContext::new(ctx)?;
    let members: Vec<FamilyMember> = families.iter().flat_map(|&f| fc.enumerate(f)).collect();
    members
        .into_par_iter()
        .map(|member| {
            let bent = is_bent(&monomial(ctx, member.alpha, member.d)?);
            Ok(FamilyCheck { member, bent })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gold_n4_has_ten_alphas() {
        let ctx = FieldCtx::new(4).unwrap();
        let gold = family_enumerate(&ctx, Family::Gold).unwrap();
        assert!(gold.iter().all(|m| m.d == 3 || m.d == 5 || m.d == 9));
        assert_eq!(gold.iter().filter(|m| m.d == 3).count(), 10);
    }

    #[test]
    fn kasami_coincides_with_gold_at_n4() {
        let ctx = FieldCtx::new(4).unwrap();
        let fc = FamilyContext::new(&ctx).unwrap();
        assert!(fc.exponents(Family::Kasami).contains(&(1, 3)));
        for a in 1..16 {
            assert_eq!(
                fc.predicate(Family::Kasami, 3, a),
                fc.predicate(Family::Gold, 3, a)
            );
        }
    }

    #[test]
    fn structurally_absent_families_are_empty() {
        let ctx = FieldCtx::new(6).unwrap();
        assert!(family_enumerate(&ctx, Family::Leander).unwrap().is_empty());
        assert!(family_enumerate(&ctx, Family::Cck).unwrap().is_empty());
        assert!(family_enumerate(&FieldCtx::new(3).unwrap(), Family::Gold).is_err());
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn all_members_bent_at_n4() {
        let ctx = FieldCtx::new(4).unwrap();
        let checks = verify_families(&ctx, &Family::ALL).unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c.bent), "{checks:?}");
    }
}
