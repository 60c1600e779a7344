//! Plane cubics and their chord–tangent group law: fitting the cubic
//! through nine points, certifying smoothness, divisor classes, torsion
//! orders, and the inverse construction that manufactures nine-point
//! configurations with a prescribed torsion class.
//!
//! The group law is based at an arbitrary curve point O via
//! P ⊕ Q = O ∗ (P ∗ Q), where ∗ is the third intersection of a line with
//! the curve. No inflection point is required, which matters over the
//! rationals where a curve need not have a rational flex.

use crate::field::{FieldSpec, Scalar};
use crate::linalg::ExactMatrix;
use crate::projective::{monomials, ExponentVector, PointConfiguration, ProjectivePoint};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

/// Largest prime modulus enumerate_points will scan.
pub const ENUMERATION_LIMIT: u64 = 10_000;

/// The ten degree-3 exponent vectors in the same graded-lex order as
/// `monomials(2, 3)` (asserted in tests).
const CUBIC_EXPONENTS: [[u32; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

const QUADRIC_EXPONENTS: [[u32; 3]; 6] = [
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 1],
    [0, 2, 0],
    [0, 1, 1],
    [0, 0, 2],
];

/// A nonzero ternary cubic form, coefficients indexed by `monomials(2, 3)`
/// and scaled so the first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneCubic {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl PlaneCubic {
    pub fn from_coeffs(field: FieldSpec, coeffs: Vec<Scalar>) -> Result<PlaneCubic> {
        if coeffs.len() != 10 {
            return Err(Error::ShapeMismatch);
        }
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        let Some(lead) = coeffs.iter().find(|c| !c.is_zero()) else {
            return Err(Error::ZeroCubic);
        };
        let inv = lead.inv().expect("nonzero scalar");
        Ok(PlaneCubic {
            field,
            coeffs: coeffs.iter().map(|c| c.mul(&inv)).collect(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Evaluates the form on a raw coordinate vector.
    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        assert_eq!(v.len(), 3, "ternary form takes three coordinates");
        let mut acc = Scalar::zero(self.field);
        for (c, e) in self.coeffs.iter().zip(CUBIC_EXPONENTS.iter()) {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for i in 0..3 {
                for _ in 0..e[i] {
                    term = term.mul(&v[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Coefficients of ∂F/∂x_i over `monomials(2, 2)`.
    fn partial(&self, i: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(self.field); 6];
        for (c, e) in self.coeffs.iter().zip(CUBIC_EXPONENTS.iter()) {
            if e[i] == 0 || c.is_zero() {
                continue;
            }
            let mut de = *e;
            de[i] -= 1;
            let j = QUADRIC_EXPONENTS
                .iter()
                .position(|q| *q == de)
                .expect("derivative exponent");
            let factor = Scalar::from_integer(self.field, e[i] as i64);
            out[j] = out[j].add(&c.mul(&factor));
        }
        out
    }

    /// The three partial derivatives evaluated on a raw coordinate vector.
    pub fn gradient(&self, v: &[Scalar]) -> [Scalar; 3] {
        let eval_quadric = |coeffs: &[Scalar]| {
            let mut acc = Scalar::zero(self.field);
            for (c, e) in coeffs.iter().zip(QUADRIC_EXPONENTS.iter()) {
                if c.is_zero() {
                    continue;
                }
                let mut term = c.clone();
                for i in 0..3 {
                    for _ in 0..e[i] {
                        term = term.mul(&v[i]);
                    }
                }
                acc = acc.add(&term);
            }
            acc
        };
        [
            eval_quadric(&self.partial(0)),
            eval_quadric(&self.partial(1)),
            eval_quadric(&self.partial(2)),
        ]
    }

    /// True iff the three partial derivatives have no common projective
    /// zero over the algebraic closure, decided by Macaulay elimination in
    /// the critical degree 4: the 18 products (quadratic monomial)·(∂F/∂x_k)
    /// span all 15 quartic monomials exactly when no common zero exists.
    /// This is characteristic-free; note that in characteristic 3 it is
    /// stronger than smoothness of the zero locus (the gradient can vanish
    /// off the curve).
    pub fn is_smooth(&self) -> bool {
        let quartics = monomials(2, 4);
        let position = |e: &ExponentVector| quartics.iter().position(|q| q == e).unwrap();
        let mut rows = Vec::with_capacity(18);
        for k in 0..3 {
            let pk = self.partial(k);
            for m in QUADRIC_EXPONENTS.iter() {
                let mut row = vec![Scalar::zero(self.field); 15];
                for (c, e) in pk.iter().zip(QUADRIC_EXPONENTS.iter()) {
                    if c.is_zero() {
                        continue;
                    }
                    let prod: ExponentVector = (0..3).map(|i| e[i] + m[i]).collect();
                    let j = position(&prod);
                    row[j] = row[j].add(c);
                }
                rows.push(row);
            }
        }
        let mat = ExactMatrix::from_rows(self.field, rows).expect("Macaulay matrix shape");
        mat.rank() == 15
    }

    /// Attaches a point to the curve, verifying F(P) = 0 exactly.
    pub fn lift_point(&self, point: ProjectivePoint) -> Result<CurvePoint> {
        if point.field() != self.field {
            return Err(Error::MixedFields);
        }
        if !self.eval(point.coords()).is_zero() {
            return Err(Error::NotOnCurve);
        }
        Ok(CurvePoint { point })
    }
}

impl std::fmt::Display for PlaneCubic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let vars = ["x", "y", "z"];
        let mut first = true;
        for (c, e) in self.coeffs.iter().zip(CUBIC_EXPONENTS.iter()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for i in 0..3 {
                for _ in 0..e[i] {
                    write!(f, "{}", vars[i])?;
                }
            }
        }
        Ok(())
    }
}

/// A projective point lying exactly on an associated cubic; constructed
/// through [`PlaneCubic::lift_point`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvePoint {
    point: ProjectivePoint,
}

impl CurvePoint {
    pub fn point(&self) -> &ProjectivePoint {
        &self.point
    }

    pub fn coords(&self) -> &[Scalar] {
        self.point.coords()
    }

    pub fn into_point(self) -> ProjectivePoint {
        self.point
    }
}

impl std::fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.point.fmt(f)
    }
}

/// The space of cubics through the given points: (dimension, basis of
/// coefficient vectors of the nullspace of the evaluation matrix).
pub fn cubic_space(
    field: FieldSpec,
    points: &[ProjectivePoint],
) -> Result<(usize, Vec<Vec<Scalar>>)> {
    let mut rows = Vec::with_capacity(points.len());
    for p in points {
        if p.field() != field {
            return Err(Error::MixedFields);
        }
        if p.dim() != 2 {
            return Err(Error::AmbientMismatch);
        }
        let row = CUBIC_EXPONENTS
            .iter()
            .map(|e| {
                let mut term = Scalar::one(field);
                for (count, coord) in e.iter().zip(p.coords()) {
                    for _ in 0..*count {
                        term = term.mul(coord);
                    }
                }
                term
            })
            .collect();
        rows.push(row);
    }
    let mat = if rows.is_empty() {
        ExactMatrix::zero(field, 0, 10)
    } else {
        ExactMatrix::from_rows(field, rows)?
    };
    let (rank, kernel) = mat.rank_and_nullspace();
    debug_assert_eq!(kernel.len(), 10 - rank);
    Ok((kernel.len(), kernel))
}

/// The unique cubic through nine pairwise distinct points. Nine conditions
/// on ten coefficients always leave at least one cubic; a solution space of
/// dimension ≥ 2 means the configuration is outside the admissible locus.
pub fn fit_cubic(points: &[ProjectivePoint]) -> Result<PlaneCubic> {
    if points.len() != 9 {
        return Err(Error::WrongPointCount {
            expected: 9,
            got: points.len(),
        });
    }
    for i in 0..9 {
        for j in i + 1..9 {
            if points[i] == points[j] {
                return Err(Error::DuplicatePoint);
            }
        }
    }
    let field = points[0].field();
    let (dim, basis) = cubic_space(field, points)?;
    match dim {
        0 => unreachable!("nine conditions cannot have full rank 10"),
        1 => PlaneCubic::from_coeffs(field, basis.into_iter().next().unwrap()),
        k => Err(Error::AmbiguousCubic { dim: k }),
    }
}

fn combine(a: &Scalar, p: &[Scalar], b: &Scalar, q: &[Scalar]) -> Vec<Scalar> {
    (0..3).map(|i| a.mul(&p[i]).add(&b.mul(&q[i]))).collect()
}

fn cross_is_zero(v: &[Scalar], w: &[Scalar]) -> bool {
    let c0 = v[1].mul(&w[2]).sub(&v[2].mul(&w[1]));
    let c1 = v[2].mul(&w[0]).sub(&v[0].mul(&w[2]));
    let c2 = v[0].mul(&w[1]).sub(&v[1].mul(&w[0]));
    c0.is_zero() && c1.is_zero() && c2.is_zero()
}

/// The third point (with multiplicity) where the line PQ — the tangent at
/// P when P = Q — meets the curve. Restricting F to the parametrized line
/// sP + uQ gives a binary cubic with known roots at P and Q; the remaining
/// root is read off its two middle coefficients, extracted from the
/// evaluations F(P ± Q) (characteristic 2 never occurs). A smooth cubic
/// contains no line, so the construction always closes.
pub fn third_intersection(curve: &PlaneCubic, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
    let field = curve.field();
    debug_assert!(curve.eval(p.coords()).is_zero(), "P must lie on the curve");
    debug_assert!(curve.eval(q.coords()).is_zero(), "Q must lie on the curve");
    let half = Scalar::from_integer(field, 2)
        .inv()
        .expect("characteristic is odd");
    let one = Scalar::one(field);
    let minus = Scalar::from_integer(field, -1);

    if p.point() != q.point() {
        // chord: F(sP + uQ) = su(c21·s + c12·u)
        let g11 = curve.eval(&combine(&one, p.coords(), &one, q.coords()));
        let g1m1 = curve.eval(&combine(&one, p.coords(), &minus, q.coords()));
        let c21 = g11.sub(&g1m1).mul(&half);
        let c12 = g11.add(&g1m1).mul(&half);
        return finish_third(curve, &c12, &c21, p.coords(), q.coords());
    }
    // tangent: pick a second point R of the tangent line from the gradient
    // (R need not lie on the curve), then F(sP + uR) = u²(c12·s + c03·u)
    let g = curve.gradient(p.coords());
    assert!(
        !(g[0].is_zero() && g[1].is_zero() && g[2].is_zero()),
        "tangent undefined at a singular point"
    );
    let candidates = [
        vec![g[1].clone(), g[0].neg(), Scalar::zero(field)],
        vec![g[2].clone(), Scalar::zero(field), g[0].neg()],
        vec![Scalar::zero(field), g[2].clone(), g[1].neg()],
    ];
    let r_raw = candidates
        .into_iter()
        .find(|v| v.iter().any(|c| !c.is_zero()) && !cross_is_zero(v, p.coords()))
        .expect("the tangent line has a second point");
    let r = ProjectivePoint::new(field, r_raw).expect("nonzero tangent vector");
    let c03 = curve.eval(r.coords());
    let f_plus = curve.eval(&combine(&one, p.coords(), &one, r.coords()));
    let f_minus = curve.eval(&combine(&one, p.coords(), &minus, r.coords()));
    let c12 = f_plus.add(&f_minus).mul(&half);
    finish_third(curve, &c03, &c12, p.coords(), r.coords())
}

fn finish_third(
    curve: &PlaneCubic,
    coeff_p: &Scalar,
    coeff_q: &Scalar,
    p: &[Scalar],
    q: &[Scalar],
) -> CurvePoint {
    let v = combine(coeff_p, p, &coeff_q.neg(), q);
    let point = ProjectivePoint::new(curve.field(), v).expect("a smooth cubic contains no line");
    curve
        .lift_point(point)
        .expect("third intersection lies on the curve")
}

/// A smooth cubic together with a base point O, carrying the group law
/// P ⊕ Q = O ∗ (P ∗ Q) with identity O.
#[derive(Debug, Clone)]
pub struct GroupContext {
    curve: PlaneCubic,
    base: CurvePoint,
}

/// Result of a bounded torsion-order search for a curve point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    pub class_point: CurvePoint,
    /// Least d with d·w = O, when one exists within the search range.
    pub order: Option<u32>,
    /// The bound the caller asked for; `order = None` certifies no torsion
    /// up to this bound.
    pub bound: u32,
}

impl TorsionReport {
    /// γ(k): 1 iff k·w = O, decided by divisibility by the found order.
    /// With no order found, 0 is certified only up to the report's bound.
    pub fn gamma(&self, k: u32) -> Result<u8> {
        assert!(k >= 1, "gamma takes k >= 1");
        match self.order {
            Some(d) => Ok(u8::from(k % d == 0)),
            None if k <= self.bound => Ok(0),
            None => Err(Error::InsufficientBound {
                k,
                bound: self.bound,
            }),
        }
    }
}

impl GroupContext {
    pub fn new(curve: PlaneCubic, base: ProjectivePoint) -> Result<GroupContext> {
        if !curve.is_smooth() {
            return Err(Error::SingularCubic);
        }
        let base = curve.lift_point(base)?;
        Ok(GroupContext { curve, base })
    }

    pub fn curve(&self) -> &PlaneCubic {
        &self.curve
    }

    pub fn base(&self) -> &CurvePoint {
        &self.base
    }

    pub fn field(&self) -> FieldSpec {
        self.curve.field()
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let s = third_intersection(&self.curve, p, q);
        third_intersection(&self.curve, &self.base, &s)
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        let oo = third_intersection(&self.curve, &self.base, &self.base);
        third_intersection(&self.curve, p, &oo)
    }

    /// k·P by double-and-add; k may be zero or negative.
    pub fn scalar_mul(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut acc = self.base.clone();
        let mag = k.unsigned_abs();
        for bit in (0..u64::BITS - mag.leading_zeros()).rev() {
            acc = self.add(&acc, &acc);
            if mag >> bit & 1 == 1 {
                acc = self.add(&acc, p);
            }
        }
        if k < 0 {
            acc = self.neg(&acc);
        }
        acc
    }

    /// The Abel image ⊕ n_i·Q_i of a degree-zero divisor Σ n_i Q_i: the
    /// unique point w with Σ n_i Q_i ~ w − O.
    pub fn divisor_class(&self, divisor: &[(CurvePoint, i64)]) -> Result<CurvePoint> {
        let degree: i64 = divisor.iter().map(|(_, n)| n).sum();
        if degree != 0 {
            return Err(Error::NonzeroDegree(degree));
        }
        let mut acc = self.base.clone();
        for (q, n) in divisor {
            if !self.curve.eval(q.coords()).is_zero() {
                return Err(Error::NotOnCurve);
            }
            acc = self.add(&acc, &self.scalar_mul(*n, q));
        }
        Ok(acc)
    }

    /// The class w = [3H − Σ P_i] for nine distinct curve points, with 3H
    /// realized by the line section {P₁, P₂, P₁∗P₂} taken three times. The
    /// result does not depend on which line realizes H.
    pub fn lclass(&self, points: &[CurvePoint]) -> Result<CurvePoint> {
        if points.len() != 9 {
            return Err(Error::WrongPointCount {
                expected: 9,
                got: points.len(),
            });
        }
        for i in 0..9 {
            for j in i + 1..9 {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint);
                }
            }
        }
        let r = third_intersection(&self.curve, &points[0], &points[1]);
        let mut divisor = vec![(points[0].clone(), 3), (points[1].clone(), 3), (r, 3)];
        divisor.extend(points.iter().map(|p| (p.clone(), -1)));
        self.divisor_class(&divisor)
    }

    /// Least d ≤ bound with d·w = O, or None when no such d exists in the
    /// certified range. Over the rationals the search is capped at 12 — no
    /// rational point of a smooth cubic has larger finite order (Mazur's
    /// uniform boundedness theorem) — and short-circuited by computing the
    /// order of w reduced at a good small prime: reduction is injective on
    /// torsion, so a large reduced order rules torsion out, and a small one
    /// pins down the only candidate, which one exact scalar multiple then
    /// certifies. The reported bound is always the requested one.
    pub fn torsion_order(&self, w: &CurvePoint, bound: u32) -> TorsionReport {
        debug_assert!(bound >= 1);
        let cap = match self.field() {
            FieldSpec::Rationals => bound.min(12),
            FieldSpec::Prime(_) => bound,
        };
        if self.field() == FieldSpec::Rationals {
            if let Some(reduced_order) = self.reduced_order(w) {
                let order = if reduced_order <= cap as u64 {
                    let d = reduced_order as u32;
                    // minimality is inherited: k·w = O forces k·w̄ = O̅,
                    // so the reduced order divides k
                    (self.scalar_mul(d as i64, w) == self.base).then_some(d)
                } else {
                    None
                };
                return TorsionReport {
                    class_point: w.clone(),
                    order,
                    bound,
                };
            }
        }
        let mut acc = w.clone();
        let mut order = None;
        for d in 1..=cap {
            if acc == self.base {
                order = Some(d);
                break;
            }
            acc = self.add(&acc, w);
        }
        TorsionReport {
            class_point: w.clone(),
            order,
            bound,
        }
    }

    /// Order of w in the group of the curve reduced at the first prime of
    /// good reduction from a fixed list; None if every listed prime is bad.
    fn reduced_order(&self, w: &CurvePoint) -> Option<u64> {
        const REDUCTION_PRIMES: [u64; 8] = [1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049];
        for p in REDUCTION_PRIMES {
            let Some((ctx, wbar)) = self.reduce_mod(w, p) else {
                continue;
            };
            // the order divides the group size, which the Hasse bound caps
            let cap = p + 1 + 2 * p.isqrt() + 1;
            let mut acc = wbar.clone();
            for d in 1..=cap {
                if acc == *ctx.base() {
                    return Some(d);
                }
                acc = ctx.add(&acc, &wbar);
            }
            unreachable!("point order exceeds the Hasse bound");
        }
        None
    }

    /// Reduces the curve, base point, and w modulo p; None when p divides
    /// a denominator or the reduced curve is singular.
    fn reduce_mod(&self, w: &CurvePoint, p: u64) -> Option<(GroupContext, CurvePoint)> {
        let field = FieldSpec::prime(p).ok()?;
        let reduce_scalar = |s: &Scalar| -> Option<Scalar> {
            let r = s.as_rational().expect("rational context");
            let den = Scalar::from_bigint(field, r.denom());
            if den.is_zero() {
                return None;
            }
            Some(Scalar::from_bigint(field, r.numer()).mul(&den.inv().expect("nonzero")))
        };
        let reduce_point = |pt: &ProjectivePoint| -> Option<ProjectivePoint> {
            // clear denominators and content so the reduction is nonzero
            let rats: Vec<_> = pt
                .coords()
                .iter()
                .map(|c| c.as_rational().expect("rational context").clone())
                .collect();
            let lcm = rats
                .iter()
                .fold(BigInt::from(1), |acc, r| acc.lcm(r.denom()));
            let mut ints: Vec<BigInt> = rats
                .iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect();
            let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !content.is_zero() {
                for v in &mut ints {
                    *v /= &content;
                }
            }
            let coords: Vec<Scalar> = ints.iter().map(|v| Scalar::from_bigint(field, v)).collect();
            ProjectivePoint::new(field, coords).ok()
        };
        let coeffs = self
            .curve
            .coeffs()
            .iter()
            .map(reduce_scalar)
            .collect::<Option<Vec<_>>>()?;
        let curve = PlaneCubic::from_coeffs(field, coeffs).ok()?;
        if !curve.is_smooth() {
            return None;
        }
        let base = curve.lift_point(reduce_point(self.base.point())?).ok()?;
        let wbar = curve.lift_point(reduce_point(w.point())?).ok()?;
        Some((GroupContext { curve, base }, wbar))
    }

    /// Builds a nine-point configuration with lclass = T from eight seed
    /// points: the ninth point is the divisor-class solution
    /// (class of 3H) ⊖ (P₁ ⊕ … ⊕ P₈) ⊖ T. For T = O the nine points are
    /// cut out by a pencil of cubics and refitting is expectedly ambiguous;
    /// for T ≠ O the fit must reproduce this context's curve uniquely.
    pub fn generate_torsion_config(
        &self,
        seeds: &[CurvePoint],
        t: &CurvePoint,
    ) -> Result<PointConfiguration> {
        if seeds.len() != 8 {
            return Err(Error::WrongPointCount {
                expected: 8,
                got: seeds.len(),
            });
        }
        for s in seeds {
            if !self.curve.eval(s.coords()).is_zero() {
                return Err(Error::NotOnCurve);
            }
        }
        for i in 0..8 {
            for j in i + 1..8 {
                if seeds[i] == seeds[j] {
                    return Err(Error::DuplicatePoint);
                }
            }
        }
        if !self.curve.eval(t.coords()).is_zero() {
            return Err(Error::NotOnCurve);
        }

        let r = third_intersection(&self.curve, &seeds[0], &seeds[1]);
        let three = |p: &CurvePoint| self.scalar_mul(3, p);
        let mut acc = self.add(&three(&seeds[0]), &three(&seeds[1]));
        acc = self.add(&acc, &three(&r));
        for s in seeds {
            acc = self.add(&acc, &self.neg(s));
        }
        let p9 = self.add(&acc, &self.neg(t));

        if seeds.contains(&p9) {
            return Err(Error::SeedCollision);
        }
        let points: Vec<CurvePoint> = seeds.iter().cloned().chain([p9]).collect();
        debug_assert_eq!(
            &self.lclass(&points).expect("nine distinct curve points"),
            t
        );

        let projective: Vec<ProjectivePoint> = points.iter().map(|p| p.point().clone()).collect();
        match fit_cubic(&projective) {
            Ok(fitted) if t == &self.base => Err(Error::Internal(format!(
                "trivial class must leave a pencil of cubics, found a unique fit {fitted}"
            ))),
            Ok(fitted) if fitted != self.curve => Err(Error::Internal(
                "unique fitted cubic differs from the generating curve".into(),
            )),
            Ok(_) => PointConfiguration::simple(self.field(), 2, projective),
            Err(Error::AmbiguousCubic { dim: 2 }) if t == &self.base => {
                PointConfiguration::simple(self.field(), 2, projective)
            }
            Err(e) => Err(e),
        }
    }
}

/// All 𝔽_p-rational points of the cubic, by scanning the line at infinity
/// z = 0 and then the affine chart z = 1 in lexicographic order.
pub fn enumerate_points(curve: &PlaneCubic) -> Result<Vec<CurvePoint>> {
    let FieldSpec::Prime(p) = curve.field() else {
        return Err(Error::EnumerationUnsupported {
            limit: ENUMERATION_LIMIT,
        });
    };
    if p > ENUMERATION_LIMIT {
        return Err(Error::EnumerationUnsupported {
            limit: ENUMERATION_LIMIT,
        });
    }
    let field = curve.field();
    let s = |v: u64| Scalar::from_integer(field, v as i64);
    let mut out = Vec::new();
    let mut push_if_on_curve = |coords: Vec<Scalar>| {
        if curve.eval(&coords).is_zero() {
            let point = ProjectivePoint::new(field, coords).expect("nonzero candidate");
            out.push(curve.lift_point(point).expect("verified on curve"));
        }
    };
    push_if_on_curve(vec![s(0), s(1), s(0)]);
    for y in 0..p {
        push_if_on_curve(vec![s(1), s(y), s(0)]);
    }
    for x in 0..p {
        for y in 0..p {
            push_if_on_curve(vec![s(x), s(y), s(1)]);
        }
    }
    Ok(out)
}
