//! A frozen table of rational cubics with a point of prescribed torsion
//! order 1–6 and an independent point of infinite order, plus the
//! generation pipelines that turn them — or scanned finite-field curves —
//! into nine-point configurations with a chosen torsion class.
//!
//! Every frozen fact is re-verified at construction time: the torsion
//! point's exact order and the generator's non-torsion are both certified
//! by `torsion_order` before any configuration is built.

use crate::cubic::{enumerate_points, CurvePoint, GroupContext, PlaneCubic};
use crate::field::{FieldSpec, Scalar};
use crate::projective::{PointConfiguration, ProjectivePoint};
use crate::{Error, Result};
use num_bigint::BigInt;

/// A Weierstrass model y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ with marked
/// rational points. Fractions are (numerator, denominator) pairs.
struct CatalogEntry {
    order: u32,
    a_invariants: [(i64, i64); 5],
    /// Affine (x, y) of a point of infinite order.
    generator: ((i64, i64), (i64, i64)),
    /// Affine (x, y) of a point of exact `order`; None means the identity.
    torsion: Option<((i64, i64), (i64, i64))>,
}

const CATALOG: [CatalogEntry; 6] = [
    CatalogEntry {
        order: 1,
        a_invariants: [(0, 1), (0, 1), (1, 1), (-7, 1), (6, 1)],
        generator: ((1, 1), (0, 1)),
        torsion: None,
    },
    CatalogEntry {
        order: 2,
        a_invariants: [(0, 1), (0, 1), (0, 1), (-12, 1), (0, 1)],
        generator: ((-2, 1), (4, 1)),
        torsion: Some(((0, 1), (0, 1))),
    },
    CatalogEntry {
        order: 3,
        a_invariants: [(-3, 1), (0, 1), (3, 1), (0, 1), (0, 1)],
        generator: ((1, 1), (1, 1)),
        torsion: Some(((0, 1), (0, 1))),
    },
    CatalogEntry {
        order: 4,
        a_invariants: [(1, 1), (3, 2), (3, 2), (0, 1), (0, 1)],
        generator: ((-1, 1), (-1, 1)),
        torsion: Some(((0, 1), (0, 1))),
    },
    CatalogEntry {
        order: 5,
        a_invariants: [(4, 1), (3, 1), (3, 1), (0, 1), (0, 1)],
        generator: ((-1, 1), (2, 1)),
        torsion: Some(((0, 1), (0, 1))),
    },
    CatalogEntry {
        order: 6,
        a_invariants: [(3, 4), (-5, 16), (-5, 16), (0, 1), (0, 1)],
        generator: ((1, 2), (-1, 4)),
        torsion: Some(((0, 1), (0, 1))),
    },
];

/// Embeds a Weierstrass model as a plane cubic: homogenizing and moving
/// everything to one side gives, over [x³, x²y, x²z, xy², xyz, xz², y³,
/// y²z, yz², z³], the coefficients [1, 0, a₂, 0, −a₁, a₄, 0, −1, −a₃, a₆].
pub fn weierstrass_cubic(field: FieldSpec, a: &[Scalar; 5]) -> PlaneCubic {
    let zero = Scalar::zero(field);
    let one = Scalar::one(field);
    let coeffs = vec![
        one.clone(),
        zero.clone(),
        a[1].clone(),
        zero.clone(),
        a[0].neg(),
        a[3].clone(),
        zero,
        one.neg(),
        a[2].neg(),
        a[4].clone(),
    ];
    PlaneCubic::from_coeffs(field, coeffs).expect("leading coefficient is 1")
}

/// A catalog curve instantiated over the rationals, with its certified
/// marked points. The base point of `ctx` is (0 : 1 : 0).
pub struct RationalSetup {
    pub ctx: GroupContext,
    pub generator: CurvePoint,
    pub torsion: CurvePoint,
}

fn fraction(field: FieldSpec, (num, den): (i64, i64)) -> Scalar {
    Scalar::from_fraction(field, &BigInt::from(num), &BigInt::from(den))
        .expect("catalog denominators are nonzero")
}

pub fn rational_setup(order: u32) -> Result<RationalSetup> {
    let Some(entry) = CATALOG.iter().find(|e| e.order == order) else {
        return Err(Error::UnrealizableOrder {
            order,
            detail: Some(
                "the rational curve catalog covers torsion orders 1 through 6; \
                 higher orders are available over finite fields"
                    .into(),
            ),
        });
    };
    let field = FieldSpec::Rationals;
    let a: Vec<Scalar> = entry
        .a_invariants
        .iter()
        .map(|&f| fraction(field, f))
        .collect();
    let curve = weierstrass_cubic(field, a.as_slice().try_into().expect("five invariants"));
    let origin = ProjectivePoint::from_integers(field, &[0, 1, 0])?;
    let ctx = GroupContext::new(curve, origin)?;

    let affine = |((xn, xd), (yn, yd)): ((i64, i64), (i64, i64))| -> Result<CurvePoint> {
        let coords = vec![
            fraction(field, (xn, xd)),
            fraction(field, (yn, yd)),
            Scalar::one(field),
        ];
        ctx.curve().lift_point(ProjectivePoint::new(field, coords)?)
    };
    let torsion = match entry.torsion {
        None => ctx.base().clone(),
        Some(t) => affine(t)?,
    };
    let generator = affine(entry.generator)?;

    let t_order = ctx.torsion_order(&torsion, 12).order;
    assert_eq!(
        t_order,
        Some(order),
        "catalog torsion point has wrong order"
    );
    let g_order = ctx.torsion_order(&generator, 12).order;
    assert_eq!(g_order, None, "catalog generator must have infinite order");

    Ok(RationalSetup {
        ctx,
        generator,
        torsion,
    })
}

/// A group context together with a nine-point configuration generated on
/// its curve.
pub struct Generated {
    pub ctx: GroupContext,
    pub config: PointConfiguration,
}

impl Generated {
    pub fn field(&self) -> FieldSpec {
        self.config.field()
    }
}

/// Deterministic seed points ±(mG ⊕ kT), m = 1, 2, …, k = 0..order, in a
/// fixed interleaved order; `skip` rotates the selection window.
fn seed_pool(
    ctx: &GroupContext,
    generator: &CurvePoint,
    torsion: &CurvePoint,
    order: u32,
    skip: usize,
    count: usize,
) -> Vec<CurvePoint> {
    let mut pool = Vec::with_capacity(skip + count);
    let mut mg = ctx.base().clone();
    while pool.len() < skip + count {
        mg = ctx.add(&mg, generator);
        let mut mgkt = mg.clone();
        for _ in 0..order.max(1) {
            pool.push(mgkt.clone());
            pool.push(ctx.neg(&mgkt));
            mgkt = ctx.add(&mgkt, torsion);
        }
    }
    pool.into_iter().skip(skip).take(count).collect()
}

const SEED_ATTEMPTS: usize = 8;

/// Builds a nine-point rational configuration whose torsion class has the
/// given order, using the frozen catalog curve. `seed` rotates the seed
/// window; collisions with the derived ninth point advance it further.
pub fn generate_over_q(order: u32, seed: u64) -> Result<Generated> {
    let setup = rational_setup(order)?;
    let mut last = Error::SeedCollision;
    for attempt in 0..SEED_ATTEMPTS {
        let skip = seed as usize + attempt;
        let seeds = seed_pool(&setup.ctx, &setup.generator, &setup.torsion, order, skip, 8);
        match setup.ctx.generate_torsion_config(&seeds, &setup.torsion) {
            Ok(config) => {
                return Ok(Generated {
                    ctx: setup.ctx,
                    config,
                })
            }
            Err(Error::SeedCollision) => last = Error::SeedCollision,
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn candidate_primes(prime: Option<u64>) -> Result<Vec<u64>> {
    match prime {
        Some(p) => {
            FieldSpec::prime(p)?;
            Ok(vec![p])
        }
        None => {
            // interpolation in degree 3t stays valid when p exceeds the
            // degree, so start above 3·8 = 24
            let mut ps = Vec::new();
            let mut p = 31;
            while ps.len() < 20 {
                if crate::field::is_prime_u64(p) {
                    ps.push(p);
                }
                p += 2;
            }
            Ok(ps)
        }
    }
}

/// Builds a nine-point configuration over a finite field whose torsion
/// class has exactly the given order, scanning short Weierstrass curves
/// y² = x³ + ax + b until one has a point of that order. With no prime
/// given, primes from 31 upward are tried in turn.
pub fn generate_over_fp(order: u32, prime: Option<u64>, seed: u64) -> Result<Generated> {
    assert!(order >= 1, "torsion order is positive");
    for p in candidate_primes(prime)? {
        let field = FieldSpec::prime(p)?;
        let s = |n: i64| Scalar::from_integer(field, n);
        for a in 0..p {
            for b in 0..p {
                // discriminant of the short form: singular iff 4a³ + 27b² = 0
                let a3 = Scalar::from_integer(field, a as i64).pow(3);
                let b2 = Scalar::from_integer(field, b as i64).pow(2);
                let disc = s(4).mul(&a3).add(&s(27).mul(&b2));
                if disc.is_zero() {
                    continue;
                }
                let a_inv = [s(0), s(0), s(0), s(a as i64), s(b as i64)];
                let curve = weierstrass_cubic(field, &a_inv);
                let pts = enumerate_points(&curve)?;
                let n = pts.len() as u32;
                if n % order != 0 {
                    continue;
                }
                let origin = ProjectivePoint::from_integers(field, &[0, 1, 0])?;
                let ctx = GroupContext::new(curve, origin)?;
                let Some(t) = pts.iter().find_map(|pt| {
                    let ord = ctx.torsion_order(pt, n).order.expect("finite group");
                    (ord % order == 0).then(|| ctx.scalar_mul((ord / order) as i64, pt))
                }) else {
                    continue;
                };
                for attempt in 0..SEED_ATTEMPTS {
                    let offset = (seed as usize + attempt) % pts.len();
                    let seeds: Vec<CurvePoint> =
                        pts.iter().cycle().skip(offset).take(8).cloned().collect();
                    match ctx.generate_torsion_config(&seeds, &t) {
                        Ok(config) => return Ok(Generated { ctx, config }),
                        Err(Error::SeedCollision) => continue,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
    }
    Err(Error::UnrealizableOrder {
        order,
        detail: Some("no scanned curve has a point of this order".into()),
    })
}
