//! Hook-product ratios over addable corners and the identities built on them.
//!
//! For a diagram `λ ⊢ n` with addable corners `λ^(j)`, the ratio
//! `r_j = ∏_{b∈λ} h(b) / ∏_{b∈λ^(j)} h(b)` equals `Q_j(0, s)` evaluated on
//! the step coordinates of `λ`. Through that bridge the moment identities on
//! sequences become
//!
//! ```text
//! Σ_j c(b^(j))  · r_j = 0
//! Σ_j c(b^(j))² · r_j = n
//! ```
//!
//! and, combined with the hook length and hook-content formulas,
//!
//! ```text
//! Σ_j (SSYT(λ^(j), d) / SSYT(λ, d))² · SYT(λ) / SYT(λ^(j)) = (n + d²) / (n + 1)
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::partitions::{addable_corners, step_coordinates, Corner, Partition};
use crate::tableaux::{hook_content_count, syt_count, ContentSign, FillingDimension};
use crate::vershik::{q_coefficient, IndexTriple, PairSequence};
use crate::{Error, ExactRational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    /// `Q_j(0, s)` on step coordinates equals the hook ratio.
    QWithHook,
    /// First content moment of the hook ratios vanishes.
    Final1,
    /// Second content moment of the hook ratios is `n`.
    Final2,
    /// Squared SSYT ratios weighted by inverse SYT ratios sum to `(n+d²)/(n+1)`.
    SsytSyt,
    /// `d · SSYT(λ, d) = Σ_j SSYT(λ^(j), d)`.
    Branching,
    /// Recursion, normalization and both moment identities on random sequences.
    VershikRandom,
}

impl IdentityId {
    pub const ALL: [IdentityId; 6] = [
        IdentityId::QWithHook,
        IdentityId::Final1,
        IdentityId::Final2,
        IdentityId::SsytSyt,
        IdentityId::Branching,
        IdentityId::VershikRandom,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::QWithHook => "QWITHHOOK",
            IdentityId::Final1 => "FINAL1",
            IdentityId::Final2 => "FINAL2",
            IdentityId::SsytSyt => "SSYT_SYT",
            IdentityId::Branching => "BRANCHING",
            IdentityId::VershikRandom => "VERSHIK_RANDOM",
        }
    }

    /// Whether the identity is parameterized by a filling dimension `d`.
    pub fn needs_dimension(self) -> bool {
        matches!(self, IdentityId::SsytSyt | IdentityId::Branching)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == wanted)
            .ok_or_else(|| Error::Config(format!("unknown identity {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// One evaluated instance of an identity. `pass` holds iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub identity: IdentityId,
    pub subject: Partition,
    pub dimension: Option<FillingDimension>,
    /// Corner index, for identities checked corner by corner.
    pub corner: Option<usize>,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(
        identity: IdentityId,
        subject: &Partition,
        dimension: Option<FillingDimension>,
        corner: Option<usize>,
        lhs: ExactRational,
        rhs: ExactRational,
    ) -> Self {
        let pass = lhs == rhs;
        IdentityCheck {
            identity,
            subject: subject.clone(),
            dimension,
            corner,
            lhs,
            rhs,
            pass,
        }
    }
}

fn rational(v: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(v.into())
}

fn ratio(num: &BigUint, den: &BigUint) -> ExactRational {
    ExactRational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// `∏_{b∈λ} h(b) / ∏_{b∈λ^(j)} h(b)`.
pub fn hook_ratio(lambda: &Partition, j: usize) -> Result<ExactRational> {
    let corners = addable_corners(lambda);
    let max = corners.len() - 1;
    let corner = corners
        .get(j)
        .ok_or(Error::IndexOutOfRange { index: j, max })?;
    Ok(ratio(&lambda.hook_product(), &corner.result.hook_product()))
}

/// Every addable corner paired with its hook ratio, bottom to top.
pub fn hook_ratios(lambda: &Partition) -> Vec<(Corner, ExactRational)> {
    let base = lambda.hook_product();
    addable_corners(lambda)
        .into_iter()
        .map(|c| {
            let r = ratio(&base, &c.result.hook_product());
            (c, r)
        })
        .collect()
}

/// One check per corner: `Q_j(0, s)` on the step coordinates against the hook ratio.
pub fn check_qwithhook(lambda: &Partition) -> Result<Vec<IdentityCheck>> {
    let sc = step_coordinates(lambda)?;
    let a = PairSequence::from_step_coords(&sc);
    let s = sc.s();
    hook_ratios(lambda)
        .into_iter()
        .map(|(corner, r)| {
            let q = q_coefficient(&a, IndexTriple::new(0, corner.index, s))?;
            Ok(IdentityCheck::new(
                IdentityId::QWithHook,
                lambda,
                None,
                Some(corner.index),
                q,
                r,
            ))
        })
        .collect()
}

fn content_moment(lambda: &Partition, power: u32) -> ExactRational {
    hook_ratios(lambda)
        .into_iter()
        .map(|(corner, r)| rational(corner.cell.content().pow(power)) * r)
        .sum()
}

/// `Σ_j c(b^(j)) · r_j` against zero.
pub fn check_final1(lambda: &Partition) -> IdentityCheck {
    let lhs = content_moment(lambda, 1);
    IdentityCheck::new(
        IdentityId::Final1,
        lambda,
        None,
        None,
        lhs,
        ExactRational::zero(),
    )
}

/// `Σ_j c(b^(j))² · r_j` against `n`.
pub fn check_final2(lambda: &Partition) -> IdentityCheck {
    let lhs = content_moment(lambda, 2);
    let rhs = rational(lambda.size());
    IdentityCheck::new(IdentityId::Final2, lambda, None, None, lhs, rhs)
}

/// `Σ_j (S(λ^(j)) / S(λ))² · SYT(λ) / SYT(λ^(j))` where `S` is the
/// hook-content count under the given sign convention.
///
/// Corners whose count vanishes contribute zero. Fails with
/// [`Error::ZeroDenominator`] when the count of `λ` itself vanishes.
pub fn ssyt_syt_sum(
    lambda: &Partition,
    d: FillingDimension,
    sign: ContentSign,
) -> Result<ExactRational> {
    let base = hook_content_count(lambda, d, sign)?.into_inner();
    if base.is_zero() {
        return Err(Error::ZeroDenominator {
            shape: lambda.to_string(),
            d: d.get(),
        });
    }
    let base_syt = syt_count(lambda)?.into_inner();
    let mut sum = ExactRational::zero();
    for corner in addable_corners(lambda) {
        let count = hook_content_count(&corner.result, d, sign)?.into_inner();
        if count.is_zero() {
            continue;
        }
        let syt = syt_count(&corner.result)?.into_inner();
        let q = ratio(&count, &base);
        sum += &q * &q * ratio(&base_syt, &syt);
    }
    Ok(sum)
}

/// `Σ_j (d ± c(b^(j)))² · r_j`; equals `d² + n` for either sign.
pub fn squared_factor_moment(
    lambda: &Partition,
    d: FillingDimension,
    sign: ContentSign,
) -> ExactRational {
    let d = i64::from(d.get());
    hook_ratios(lambda)
        .into_iter()
        .map(|(corner, r)| {
            let f = sign.factor(d, corner.cell.content());
            rational(f * f) * r
        })
        .sum()
}

/// `(n + d²) / (n + 1)`.
pub fn ssyt_syt_target(n: usize, d: FillingDimension) -> ExactRational {
    let d = BigInt::from(d.get());
    ExactRational::new(BigInt::from(n) + &d * &d, BigInt::from(n + 1))
}

pub fn check_ssyt_syt(lambda: &Partition, d: FillingDimension) -> Result<IdentityCheck> {
    let lhs = ssyt_syt_sum(lambda, d, ContentSign::Plus)?;
    let rhs = ssyt_syt_target(lambda.size(), d);
    Ok(IdentityCheck::new(
        IdentityId::SsytSyt,
        lambda,
        Some(d),
        None,
        lhs,
        rhs,
    ))
}

/// `d · SSYT(λ, d)` against `Σ_j SSYT(λ^(j), d)`.
pub fn check_branching(lambda: &Partition, d: FillingDimension) -> Result<IdentityCheck> {
    let base = hook_content_count(lambda, d, ContentSign::Plus)?.into_inner();
    let lhs = rational(BigUint::from(d.get()) * base);
    let mut rhs = BigUint::zero();
    for corner in addable_corners(lambda) {
        rhs += hook_content_count(&corner.result, d, ContentSign::Plus)?.into_inner();
    }
    Ok(IdentityCheck::new(
        IdentityId::Branching,
        lambda,
        Some(d),
        None,
        lhs,
        rational(rhs),
    ))
}
