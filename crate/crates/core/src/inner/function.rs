use std::f64::consts::PI;

use num_complex::Complex64;

use super::coefficients::{CoefficientSequence, Tail};
use crate::error::{Error, Result};
use crate::point::{CirclePoint, DiskPoint};
use crate::singular::delta::{self, Parity};

/// An analytic function on the open unit disk.
///
/// The real part of its radial limit is the represented function on the
/// circle; the imaginary part is the Fourier conjugate. Representations are
/// lazy: combinations and scalings are evaluated term by term.
#[derive(Debug, Clone, PartialEq)]
pub enum InnerFunction {
    /// A power series with finitely many coefficients, together with the
    /// angles where the boundary function is known to be singular.
    Series { coeffs: CoefficientSequence, singular: Vec<CirclePoint> },
    /// The closed rational form associated with the `order`-th derivative of
    /// the delta function centered at `theta1`.
    DeltaForm { order: u32, theta1: CirclePoint },
    /// Closed forms of the even or odd part of the delta function at `theta1`.
    DeltaParity { part: Parity, theta1: CirclePoint },
    /// `factor * inner(z)`.
    Scaled { factor: Complex64, inner: Box<InnerFunction> },
    /// `conj(inner(conj(z)))`: the function whose coefficients are the
    /// complex conjugates of those of `inner`.
    Conjugate(Box<InnerFunction>),
    /// Real linear combination.
    Combination(Vec<(f64, InnerFunction)>),
}

/// Builds a series function from coefficients (no singular angles declared).
pub fn make_series(coeffs: CoefficientSequence) -> InnerFunction {
    InnerFunction::Series { coeffs, singular: Vec::new() }
}

/// Lazy real linear combination.
pub fn combine(terms: Vec<(f64, InnerFunction)>) -> Result<InnerFunction> {
    if let Some((w, _)) = terms.iter().find(|(w, _)| !w.is_finite()) {
        return Err(Error::NonFinite(format!("combination weight {w}")));
    }
    Ok(InnerFunction::Combination(terms))
}

impl InnerFunction {
    pub fn series_with_singularities(coeffs: CoefficientSequence, singular: Vec<CirclePoint>) -> Self {
        InnerFunction::Series { coeffs, singular }
    }

    /// A constant function.
    pub fn constant_fn(c0: Complex64) -> Self {
        make_series(CoefficientSequence::constant(c0))
    }

    /// Closed form for the `order`-th derivative of the delta function.
    pub fn delta(order: u32, theta1: CirclePoint) -> Result<Self> {
        delta::check_order(order)?;
        Ok(InnerFunction::DeltaForm { order, theta1 })
    }

    /// `factor * self`, folding nested scalings.
    pub fn scale(self, factor: Complex64) -> Self {
        if factor == Complex64::new(1.0, 0.0) {
            return self;
        }
        match self {
            InnerFunction::Scaled { factor: f, inner } => inner.scale(f * factor),
            other => InnerFunction::Scaled { factor, inner: Box::new(other) },
        }
    }

    pub fn conjugate(self) -> Self {
        match self {
            InnerFunction::Conjugate(inner) => *inner,
            other => InnerFunction::Conjugate(Box::new(other)),
        }
    }

    /// `w(z)` at a point of the open disk.
    pub fn eval(&self, p: DiskPoint) -> Complex64 {
        self.eval_z(p.z())
    }

    /// `w(z)` for `rho < 1` given in polar form.
    pub fn eval_polar(&self, rho: f64, theta: f64) -> Result<Complex64> {
        Ok(self.eval(DiskPoint::new(rho, theta)?))
    }

    /// Evaluation without the domain check; callers guarantee `|z| < 1`.
    pub(crate) fn eval_z(&self, z: Complex64) -> Complex64 {
        match self {
            InnerFunction::Series { coeffs, .. } => coeffs.eval(z),
            InnerFunction::DeltaForm { order, theta1 } => delta::delta_form_value(*order, *theta1, z),
            InnerFunction::DeltaParity { part, theta1 } => delta::parity_value(*part, *theta1, z),
            InnerFunction::Scaled { factor, inner } => factor * inner.eval_z(z),
            InnerFunction::Conjugate(inner) => inner.eval_z(z.conj()).conj(),
            InnerFunction::Combination(terms) => terms.iter().map(|(w, f)| f.eval_z(z) * *w).sum(),
        }
    }

    /// The value at the origin, `c0`.
    pub fn constant(&self) -> Complex64 {
        match self {
            InnerFunction::Series { coeffs, .. } => coeffs.c0(),
            InnerFunction::DeltaForm { order, .. } => {
                if *order == 0 {
                    Complex64::new(1.0 / (2.0 * PI), 0.0)
                } else {
                    Complex64::default()
                }
            }
            InnerFunction::DeltaParity { part, .. } => match part {
                Parity::Even => Complex64::new(1.0 / (2.0 * PI), 0.0),
                Parity::Odd => Complex64::default(),
            },
            InnerFunction::Scaled { factor, inner } => factor * inner.constant(),
            InnerFunction::Conjugate(inner) => inner.constant().conj(),
            InnerFunction::Combination(terms) => terms.iter().map(|(w, f)| f.constant() * *w).sum(),
        }
    }

    /// The same function with its constant term removed.
    pub fn without_constant(self) -> Self {
        let c0 = self.constant();
        if c0 == Complex64::default() {
            return self;
        }
        match self {
            InnerFunction::Series { coeffs, singular } => {
                InnerFunction::Series { coeffs: coeffs.with_c0(Complex64::default()), singular }
            }
            other => InnerFunction::Combination(vec![(1.0, other), (1.0, InnerFunction::constant_fn(-c0))]),
        }
    }

    /// Number of stored coefficients, or `None` when the representation is a
    /// closed form with an infinite sequence.
    ///
    /// A combination stops at the shortest cut series among its terms, or
    /// at the longest exact one when none is cut.
    pub fn natural_order(&self) -> Option<usize> {
        self.order_and_tail().map(|(k, _)| k)
    }

    fn order_and_tail(&self) -> Option<(usize, Tail)> {
        match self {
            InnerFunction::Series { coeffs, .. } => Some((coeffs.order(), coeffs.tail())),
            InnerFunction::DeltaForm { .. } | InnerFunction::DeltaParity { .. } => None,
            InnerFunction::Scaled { inner, .. } | InnerFunction::Conjugate(inner) => inner.order_and_tail(),
            InnerFunction::Combination(terms) => {
                let parts: Vec<(usize, Tail)> = terms.iter().filter_map(|(_, f)| f.order_and_tail()).collect();
                let cut = parts.iter().filter(|p| p.1 == Tail::Truncated).map(|p| p.0).min();
                match cut {
                    Some(k) => Some((k, Tail::Truncated)),
                    None => parts.iter().map(|p| p.0).max().map(|k| (k, Tail::Exact)),
                }
            }
        }
    }

    /// Taylor coefficients `c_0 ..= c_order`.
    ///
    /// Series shorter than `order` are padded with zeros.
    pub fn coefficients(&self, order: usize) -> CoefficientSequence {
        match self {
            InnerFunction::Series { coeffs, .. } => coeffs.resized(order),
            InnerFunction::DeltaForm { order: n, theta1 } => delta::delta_coeffs(*n, *theta1, order),
            InnerFunction::DeltaParity { part, theta1 } => {
                let (c0, t) = (self.constant(), theta1.theta());
                let seq = match part {
                    Parity::Even => {
                        CoefficientSequence::from_rule(order, c0, |k| Complex64::new((k as f64 * t).cos() / PI, 0.0))
                    }
                    Parity::Odd => {
                        CoefficientSequence::from_rule(order, c0, |k| Complex64::new(0.0, -(k as f64 * t).sin() / PI))
                    }
                };
                seq.expect("closed-form coefficients are finite")
            }
            InnerFunction::Scaled { factor, inner } => inner.coefficients(order).scaled(*factor),
            InnerFunction::Conjugate(inner) => inner.coefficients(order).conj(),
            InnerFunction::Combination(terms) => {
                let seqs: Vec<(f64, CoefficientSequence)> =
                    terms.iter().map(|(w, f)| (*w, f.coefficients(order))).collect();
                let refs: Vec<(f64, &CoefficientSequence)> = seqs.iter().map(|(w, s)| (*w, s)).collect();
                let mut out = CoefficientSequence::weighted_sum(&refs).resized(order);
                if terms.is_empty() {
                    out = out.with_tail(Tail::Exact);
                }
                out
            }
        }
    }

    /// Coefficients up to the natural order; errors for pure closed forms.
    pub fn coefficient_view(&self) -> Result<CoefficientSequence> {
        let order = self.natural_order().ok_or_else(|| {
            Error::InvalidArgument("closed form has no finite coefficient list; request an explicit order".into())
        })?;
        Ok(self.coefficients(order))
    }

    /// Angles on the circle where the boundary function is singular.
    pub fn singular_angles(&self) -> Vec<CirclePoint> {
        let mut out = match self {
            InnerFunction::Series { singular, .. } => singular.clone(),
            InnerFunction::DeltaForm { theta1, .. } => vec![*theta1],
            InnerFunction::DeltaParity { theta1, .. } => vec![*theta1, theta1.reflected()],
            InnerFunction::Scaled { inner, .. } => inner.singular_angles(),
            InnerFunction::Conjugate(inner) => inner.singular_angles().into_iter().map(CirclePoint::reflected).collect(),
            InnerFunction::Combination(terms) => terms.iter().flat_map(|(_, f)| f.singular_angles()).collect(),
        };
        out.sort_by(|a, b| a.theta().total_cmp(&b.theta()));
        out.dedup_by(|a, b| a.distance(*b) < 1e-14);
        out
    }

    /// Largest radius at which the representation is trustworthy to `tol`:
    /// 1 for closed forms, the truncation limit for cut series.
    pub fn max_reliable_radius(&self, tol: f64, candidates: &[f64]) -> f64 {
        match self {
            InnerFunction::Series { coeffs, .. } => {
                if coeffs.tail() == Tail::Exact {
                    return 1.0;
                }
                candidates.iter().copied().filter(|&r| coeffs.tail_bound(r) <= tol).fold(0.0, f64::max)
            }
            InnerFunction::DeltaForm { .. } | InnerFunction::DeltaParity { .. } => 1.0,
            InnerFunction::Scaled { factor, inner } => {
                let f = factor.norm();
                if f == 0.0 { 1.0 } else { inner.max_reliable_radius(tol / f, candidates) }
            }
            InnerFunction::Conjugate(inner) => inner.max_reliable_radius(tol, candidates),
            InnerFunction::Combination(terms) => terms
                .iter()
                .filter(|(w, _)| *w != 0.0)
                .map(|(w, f)| f.max_reliable_radius(tol / w.abs(), candidates))
                .fold(1.0, f64::min),
        }
    }

    /// Truncation error estimate at radius `rho`; zero for closed forms.
    pub fn truncation_bound(&self, rho: f64) -> f64 {
        match self {
            InnerFunction::Series { coeffs, .. } => coeffs.tail_bound(rho),
            InnerFunction::DeltaForm { .. } | InnerFunction::DeltaParity { .. } => 0.0,
            InnerFunction::Scaled { factor, inner } => factor.norm() * inner.truncation_bound(rho),
            InnerFunction::Conjugate(inner) => inner.truncation_bound(rho),
            InnerFunction::Combination(terms) => terms.iter().map(|(w, f)| w.abs() * f.truncation_bound(rho)).sum(),
        }
    }

    /// `w(z / z1)` with `z1 = exp(i theta1)`: shifts the boundary function by
    /// `theta1`.
    pub fn rotate(&self, theta1: CirclePoint) -> InnerFunction {
        let t = theta1.theta();
        match self {
            InnerFunction::Series { coeffs, singular } => InnerFunction::Series {
                coeffs: coeffs.map_indexed(coeffs.c0(), |k, c| c * Complex64::from_polar(1.0, -(k as f64) * t)),
                singular: singular.iter().map(|s| s.shifted(t)).collect(),
            },
            InnerFunction::DeltaForm { order, theta1: a } => {
                InnerFunction::DeltaForm { order: *order, theta1: a.shifted(t) }
            }
            InnerFunction::DeltaParity { part, theta1: a } => delta::parity_as_combination(*part, *a).rotate(theta1),
            InnerFunction::Scaled { factor, inner } => inner.rotate(theta1).scale(*factor),
            InnerFunction::Conjugate(inner) => inner.rotate(CirclePoint::new(-t)).conjugate(),
            InnerFunction::Combination(terms) => {
                InnerFunction::Combination(terms.iter().map(|(w, f)| (*w, f.rotate(theta1))).collect())
            }
        }
    }

    /// Splits `w = w1 + w2` where `w1` carries the even part of the boundary
    /// function (coefficients `Re c_k`) and `w2` the odd part (coefficients
    /// `i Im c_k`). On the real segment `(-1, 1)`, `w1` is real and `w2` is
    /// purely imaginary.
    ///
    /// Series are split coefficient by coefficient; other representations
    /// through `w1 = (w + w*)/2`, `w2 = (w - w*)/2` with `w*(z) = conj(w(conj z))`.
    pub fn parity_split(&self) -> (InnerFunction, InnerFunction) {
        match self {
            InnerFunction::Series { coeffs, singular } => {
                let even = coeffs.map_indexed(Complex64::new(coeffs.c0().re, 0.0), |_, c| Complex64::new(c.re, 0.0));
                let odd = coeffs.map_indexed(Complex64::new(0.0, coeffs.c0().im), |_, c| Complex64::new(0.0, c.im));
                let mut sym: Vec<CirclePoint> = singular.clone();
                sym.extend(singular.iter().map(|s| s.reflected()));
                (
                    InnerFunction::Series { coeffs: even, singular: sym.clone() },
                    InnerFunction::Series { coeffs: odd, singular: sym },
                )
            }
            other => {
                let mirror = other.clone().conjugate();
                (
                    InnerFunction::Combination(vec![(0.5, other.clone()), (0.5, mirror.clone())]),
                    InnerFunction::Combination(vec![(0.5, other.clone()), (-0.5, mirror)]),
                )
            }
        }
    }
}

impl std::ops::Mul<InnerFunction> for f64 {
    type Output = InnerFunction;

    fn mul(self, rhs: InnerFunction) -> InnerFunction {
        InnerFunction::Combination(vec![(self, rhs)])
    }
}

impl std::ops::Add for InnerFunction {
    type Output = InnerFunction;

    fn add(self, rhs: InnerFunction) -> InnerFunction {
        InnerFunction::Combination(vec![(1.0, self), (1.0, rhs)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::FRAC_PI_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_series(rng: &mut ChaCha8Rng, order: usize) -> InnerFunction {
        let coeffs = (0..order).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        make_series(CoefficientSequence::new(c(rng.gen_range(-1.0..1.0), 0.0), coeffs).unwrap())
    }

    fn random_point(rng: &mut ChaCha8Rng) -> DiskPoint {
        DiskPoint::new(rng.gen_range(0.0..0.95), rng.gen_range(-PI..PI)).unwrap()
    }

    #[test]
    fn zero_series_is_zero() {
        let w = make_series(CoefficientSequence::zero(8));
        assert_eq!(w.eval(DiskPoint::new(0.7, 1.0).unwrap()), Complex64::default());
    }

    #[test]
    fn origin_returns_constant_term() {
        let seq = CoefficientSequence::from_rule(64, c(1.0 / (2.0 * PI), 0.0), |_| c(1.0 / PI, 0.0)).unwrap();
        let w = make_series(seq);
        assert!((w.eval(DiskPoint::origin()) - c(1.0 / (2.0 * PI), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn single_monomial() {
        let w = make_series(CoefficientSequence::new(c(0.0, 0.0), vec![c(1.0, 0.0)]).unwrap());
        let v = w.eval(DiskPoint::new(0.5, 0.0).unwrap());
        assert_eq!(v, c(0.5, 0.0));
    }

    #[test]
    fn delta_series_matches_rational_form() {
        // geometric series 1/(2 pi) + (1/pi) sum chi^k at theta = theta1 is
        // 1/(2 pi) - (1/pi) rho / (rho - 1)
        let theta1 = CirclePoint::new(0.4);
        let rational = InnerFunction::delta(0, theta1).unwrap();
        for rho in [0.1, 0.5, 0.9] {
            let p = DiskPoint::new(rho, 0.4).unwrap();
            let expected = 1.0 / (2.0 * PI) - rho / (PI * (rho - 1.0));
            assert!((rational.eval(p) - c(expected, 0.0)).norm() < 1e-12);
            let series = make_series(rational.coefficients(2000));
            assert!((series.eval(p) - c(expected, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn combination_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = random_series(&mut rng, 12);
        let v = random_series(&mut rng, 20);
        let id = combine(vec![(1.0, w.clone())]).unwrap();
        let zero = combine(vec![(1.0, w.clone()), (-1.0, w.clone())]).unwrap();
        for _ in 0..50 {
            let p = random_point(&mut rng);
            assert!((id.eval(p) - w.eval(p)).norm() < 1e-15);
            assert!(zero.eval(p).norm() < 1e-15);
            let (a, b) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let lin = combine(vec![(a, w.clone()), (b, v.clone())]).unwrap();
            assert!((lin.eval(p) - (w.eval(p) * a + v.eval(p) * b)).norm() < 1e-12);
        }
        let mixed = combine(vec![(2.0, w.clone()), (3.0, v.clone())]).unwrap().coefficient_view().unwrap();
        // exact polynomials combine up to the longer one
        assert_eq!(mixed.order(), 20);
        for k in 0..=20 {
            let expected = w.coefficients(20).get(k) * 2.0 + v.coefficients(20).get(k) * 3.0;
            assert!((mixed.get(k) - expected).norm() < 1e-14);
        }
        assert!(combine(vec![(f64::NAN, w)]).is_err());
    }

    #[test]
    fn rotation_rules() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let w = random_series(&mut rng, 16);
        assert!(w.rotate(CirclePoint::new(0.0)).coefficient_view().unwrap().approx_eq(&w.coefficient_view().unwrap(), 1e-15));
        let t = CirclePoint::new(1.3);
        let back = w.rotate(t).rotate(CirclePoint::new(-1.3));
        assert!(back.coefficient_view().unwrap().approx_eq(&w.coefficient_view().unwrap(), 1e-12));

        let mono = make_series(CoefficientSequence::new(c(0.0, 0.0), vec![c(1.0, 0.0)]).unwrap());
        let rotated = mono.rotate(CirclePoint::new(FRAC_PI_2));
        assert!((rotated.coefficient_view().unwrap().get(1) - c(0.0, -1.0)).norm() < 1e-15);
        let z1 = Complex64::from_polar(1.0, FRAC_PI_2);
        for _ in 0..10 {
            let p = random_point(&mut rng);
            assert!((rotated.eval(p) - mono.eval_z(p.z() / z1)).norm() < 1e-14);
        }
    }

    #[test]
    fn rotation_shifts_angle_for_every_representation() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let shift = 0.9;
        let funcs = vec![
            random_series(&mut rng, 10),
            InnerFunction::delta(2, CirclePoint::new(0.3)).unwrap(),
            delta::delta_parity_parts(CirclePoint::new(1.1)).1,
            random_series(&mut rng, 5).conjugate(),
            InnerFunction::delta(1, CirclePoint::new(-2.0)).unwrap().scale(c(0.0, 2.0)),
        ];
        for w in funcs {
            let r = w.rotate(CirclePoint::new(shift));
            for _ in 0..20 {
                let p = random_point(&mut rng);
                let q = DiskPoint::new(p.rho(), p.theta() - shift).unwrap();
                assert!((r.eval(p) - w.eval(q)).norm() < 1e-12 * (1.0 + w.eval(q).norm()));
            }
        }
    }

    #[test]
    fn parity_split_series() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let w = random_series(&mut rng, 24);
        let (w1, w2) = w.parity_split();
        for _ in 0..100 {
            let p = random_point(&mut rng);
            assert!((w1.eval(p) + w2.eval(p) - w.eval(p)).norm() < 1e-12);
        }
        for rho in [0.1, 0.5, 0.9] {
            let x = DiskPoint::new(rho, 0.0).unwrap();
            assert!(w1.eval(x).im.abs() < 1e-12);
            assert!(w2.eval(x).re.abs() < 1e-12);
        }
    }

    #[test]
    fn parity_split_definite_inputs() {
        let real = make_series(CoefficientSequence::new(c(0.0, 0.0), vec![c(1.0, 0.0), c(-2.0, 0.0)]).unwrap());
        let (_, odd) = real.parity_split();
        assert!(odd.coefficient_view().unwrap().coeffs().iter().all(|z| z.norm() == 0.0));
        let imag = make_series(CoefficientSequence::new(c(0.0, 0.0), vec![c(0.0, 1.0), c(0.0, 3.0)]).unwrap());
        let (even, _) = imag.parity_split();
        assert!(even.coefficient_view().unwrap().coeffs().iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn parity_split_of_delta_matches_closed_parts() {
        let theta1 = CirclePoint::new(0.8);
        let (w1, w2) = InnerFunction::delta(0, theta1).unwrap().parity_split();
        let (e, o) = delta::delta_parity_parts(theta1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let p = random_point(&mut rng);
            assert!((w1.eval(p) - e.eval(p)).norm() < 1e-12);
            assert!((w2.eval(p) - o.eval(p)).norm() < 1e-12);
        }
    }

    #[test]
    fn constants_and_singular_angles() {
        let d = InnerFunction::delta(0, CirclePoint::new(1.0)).unwrap();
        assert!((d.constant().re - 1.0 / (2.0 * PI)).abs() < 1e-16);
        assert_eq!(d.clone().without_constant().constant(), Complex64::default());
        let sum = d + InnerFunction::delta(3, CirclePoint::new(-1.0)).unwrap().conjugate();
        let angles: Vec<f64> = sum.singular_angles().iter().map(|a| a.theta()).collect();
        assert_eq!(angles, vec![1.0]);
    }
}
