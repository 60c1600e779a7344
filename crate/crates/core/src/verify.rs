//! The dichotomy check for nine points in the plane: the dimension of the
//! degree-3t component of the t-th symbolic power is predicted from the
//! torsion order of the class [3H − Σ Pᵢ] on the cubic through the points,
//! and compared against the interpolation-matrix rank oracle, which knows
//! nothing about the group law. Mismatches are recorded, never repaired.

use crate::cubic::{cubic_space, CurvePoint, GroupContext, PlaneCubic, TorsionReport};
use crate::field::{FieldSpec, Scalar};
use crate::interpolation::dim_symbolic_component;
use crate::projective::PointConfiguration;
use crate::{Error, Result};

/// h⁰ predicted from the torsion order: 1 + ⌊t/d⌋ for order d, constant 1
/// for a class with no torsion up to the report's bound. Asking beyond the
/// certified bound is refused rather than guessed.
pub fn predict_h0(report: &TorsionReport, t: u32) -> Result<usize> {
    assert!(t >= 1, "prediction takes t >= 1");
    match report.order {
        Some(d) => Ok(1 + (t / d) as usize),
        None if t <= report.bound => Ok(1),
        None => Err(Error::InsufficientBound {
            k: t,
            bound: report.bound,
        }),
    }
}

/// One row of the dichotomy comparison at a single t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRecord {
    pub t: u32,
    /// 1 + Σ_{k ≤ t} γ(k), computed from the group law.
    pub predicted: usize,
    /// dim [I⁽ᵗ⁾]_{3t} from the interpolation matrix.
    pub oracle: usize,
    /// oracle − 1; the Euler characteristic of the twisted ideal sheaf is 1.
    pub h1: usize,
    pub matches: bool,
}

/// Full comparison of prediction and oracle for one configuration.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub field: FieldSpec,
    /// Display forms of the nine points, in configuration order.
    pub points: Vec<String>,
    /// True when the points carry a pencil of cubics (trivial class); the
    /// verification then runs on a smooth member of the pencil.
    pub pencil: bool,
    pub torsion_order: Option<u32>,
    pub torsion_bound: u32,
    pub records: Vec<VerifyRecord>,
    /// Values of t where h¹ strictly increases.
    pub jumps: Vec<u32>,
    /// Whether h¹(t) > 0 ⟺ some k ≤ t has γ(k) = 1 held at every t.
    pub jump_iff_torsion: bool,
    pub all_match: bool,
    /// Finite-field runs exercise the same machinery outside the setting
    /// the dichotomy is stated in; their agreement is evidence, not a test.
    pub extrapolated: bool,
}

/// Picks the curve the group law runs on: the unique cubic through the
/// nine points when it exists (and is smooth), or a smooth member of the
/// pencil when the solution space is 2-dimensional. A pencil of cubics has
/// at most 12 singular members unless every member is singular, so over
/// the rationals 15 candidates suffice; over 𝔽_p the whole ℙ¹ is scanned.
fn select_curve(config: &PointConfiguration) -> Result<(PlaneCubic, bool)> {
    let field = config.field();
    let (dim, basis) = cubic_space(field, config.points())?;
    match dim {
        1 => {
            let curve = PlaneCubic::from_coeffs(field, basis.into_iter().next().unwrap())?;
            if !curve.is_smooth() {
                return Err(Error::SingularCubic);
            }
            Ok((curve, false))
        }
        2 => {
            let b1 = &basis[0];
            let b2 = &basis[1];
            let member = |lambda: &Scalar, mu: &Scalar| -> PlaneCubic {
                let coeffs = b1
                    .iter()
                    .zip(b2)
                    .map(|(c1, c2)| lambda.mul(c1).add(&mu.mul(c2)))
                    .collect();
                PlaneCubic::from_coeffs(field, coeffs)
                    .expect("independent basis vectors span no zero form")
            };
            let candidates: Vec<(Scalar, Scalar)> = match field {
                FieldSpec::Rationals => {
                    let mut c: Vec<(Scalar, Scalar)> = (0..=13)
                        .map(|j| (Scalar::one(field), Scalar::from_integer(field, j)))
                        .collect();
                    c.push((Scalar::zero(field), Scalar::one(field)));
                    c
                }
                FieldSpec::Prime(p) => {
                    let mut c: Vec<(Scalar, Scalar)> = (0..p)
                        .map(|j| (Scalar::one(field), Scalar::from_integer(field, j as i64)))
                        .collect();
                    c.push((Scalar::zero(field), Scalar::one(field)));
                    c
                }
            };
            candidates
                .iter()
                .map(|(l, m)| member(l, m))
                .find(|c| c.is_smooth())
                .map(|c| (c, true))
                .ok_or(Error::NoSmoothMember)
        }
        k => Err(Error::AmbiguousCubic { dim: k }),
    }
}

/// Runs the dichotomy on nine distinct plane points: fits the cubic, takes
/// the class w = [3H − Σ Pᵢ] with base point P₁, bounds its torsion order,
/// and compares 1 + Σ γ against the rank oracle for every t ≤ t_max.
pub fn verify_config(config: &PointConfiguration, t_max: u32, bound: u32) -> Result<VerifyReport> {
    if config.ambient() != 2 {
        return Err(Error::AmbientMismatch);
    }
    if config.len() != 9 {
        return Err(Error::WrongPointCount {
            expected: 9,
            got: config.len(),
        });
    }
    let (curve, pencil) = select_curve(config)?;
    let ctx = GroupContext::new(curve, config.points()[0].clone())?;
    let nine: Vec<CurvePoint> = config
        .points()
        .iter()
        .map(|p| ctx.curve().lift_point(p.clone()))
        .collect::<Result<_>>()?;
    let w = ctx.lclass(&nine)?;
    let report = ctx.torsion_order(&w, bound);

    let mut records = Vec::with_capacity(t_max as usize);
    let mut jumps = Vec::new();
    let mut previous_h1 = 0usize;
    let mut iff_holds = true;
    for t in 1..=t_max {
        let predicted = predict_h0(&report, t)?;
        let oracle = dim_symbolic_component(config, t, 3 * t);
        if oracle == 0 {
            return Err(Error::Internal(format!(
                "h0 vanished at t = {t}; the Euler characteristic forces h0 >= 1"
            )));
        }
        let h1 = oracle - 1;
        if h1 > previous_h1 {
            jumps.push(t);
        }
        previous_h1 = h1;
        let torsion_reached = report.order.is_some_and(|d| t >= d);
        if (h1 > 0) != torsion_reached {
            iff_holds = false;
        }
        records.push(VerifyRecord {
            t,
            predicted,
            oracle,
            h1,
            matches: predicted == oracle,
        });
    }

    Ok(VerifyReport {
        field: config.field(),
        points: config.points().iter().map(|p| p.to_string()).collect(),
        pencil,
        torsion_order: report.order,
        torsion_bound: report.bound,
        all_match: records.iter().all(|r| r.matches),
        records,
        jumps,
        jump_iff_torsion: iff_holds,
        extrapolated: matches!(config.field(), FieldSpec::Prime(_)),
    })
}

/// One generated-and-verified configuration in a support experiment.
#[derive(Debug, Clone)]
pub struct SupportRecord {
    pub order: u32,
    /// The field the configuration was actually built over; requests the
    /// rational catalog cannot honor are routed to a finite field.
    pub field: FieldSpec,
    pub first_jump: Option<u32>,
    pub h0_sequence: Vec<usize>,
    pub all_match: bool,
    pub extrapolated: bool,
}

#[derive(Debug, Clone)]
pub struct SupportSummary {
    pub records: Vec<SupportRecord>,
    /// Sorted distinct first-jump indices observed across the experiment.
    pub thresholds: Vec<u32>,
}

/// For each requested order, generates a configuration whose class has
/// that exact order and verifies it, tabulating where h¹ first jumps.
pub fn support_experiment(orders: &[u32], field: FieldSpec, t_max: u32) -> Result<SupportSummary> {
    let mut records = Vec::with_capacity(orders.len());
    for &order in orders {
        let generated = match field {
            FieldSpec::Rationals => match crate::catalog::generate_over_q(order, 0) {
                Ok(g) => g,
                Err(Error::UnrealizableOrder { .. }) => {
                    crate::catalog::generate_over_fp(order, None, 0)?
                }
                Err(e) => return Err(e),
            },
            FieldSpec::Prime(p) => crate::catalog::generate_over_fp(order, Some(p), 0)?,
        };
        let report = verify_config(&generated.config, t_max, 36)?;
        records.push(SupportRecord {
            order,
            field: generated.field(),
            first_jump: report.jumps.first().copied(),
            h0_sequence: report.records.iter().map(|r| r.oracle).collect(),
            all_match: report.all_match,
            extrapolated: report.extrapolated,
        });
    }
    let mut thresholds: Vec<u32> = records.iter().filter_map(|r| r.first_jump).collect();
    thresholds.sort_unstable();
    thresholds.dedup();
    Ok(SupportSummary {
        records,
        thresholds,
    })
}
