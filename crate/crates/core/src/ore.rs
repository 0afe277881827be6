//! Skew polynomial rings `R[x; τ, δ]` with left coefficients and the
//! normality check for quadratic relators `x² - a x - b`.

use crate::error::{Error, Result};
use crate::ring::{BaseRing, Twist};
use crate::text::{coefficient_term, join_terms};

/// `Σ cᵢ xⁱ`, dense, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPoly<E> {
    twist: Twist,
    coeffs: Vec<E>,
}

impl<E> SkewPoly<E> {
    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// `R[x; τᵢ, δᵢ]` for one of the two twists carried by the base ring.
#[derive(Clone, Copy, Debug)]
pub struct OreExtension<'a, R: BaseRing> {
    ring: &'a R,
    twist: Twist,
}

impl<'a, R: BaseRing> OreExtension<'a, R> {
    pub fn new(ring: &'a R, twist: Twist) -> Self {
        OreExtension { ring, twist }
    }

    pub fn ring(&self) -> &'a R {
        self.ring
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn poly(&self, coeffs: Vec<R::Elem>) -> SkewPoly<R::Elem> {
        let mut p = SkewPoly {
            twist: self.twist,
            coeffs,
        };
        self.trim(&mut p);
        p
    }

    pub fn constant(&self, c: R::Elem) -> SkewPoly<R::Elem> {
        self.poly(vec![c])
    }

    /// `c · x^n`.
    pub fn monomial(&self, c: R::Elem, n: usize) -> SkewPoly<R::Elem> {
        let mut v = vec![self.ring.zero(); n];
        v.push(c);
        self.poly(v)
    }

    pub fn x(&self) -> SkewPoly<R::Elem> {
        self.monomial(self.ring.one(), 1)
    }

    fn trim(&self, p: &mut SkewPoly<R::Elem>) {
        while p.coeffs.last().is_some_and(|c| self.ring.is_zero(c)) {
            p.coeffs.pop();
        }
    }

    fn check(&self, p: &SkewPoly<R::Elem>) -> Result<()> {
        if p.twist != self.twist {
            return Err(Error::ContextMismatch(format!(
                "polynomial over {:?} used in the extension over {:?}",
                p.twist, self.twist
            )));
        }
        if !p.coeffs.iter().all(|c| self.ring.contains(c)) {
            return Err(Error::ContextMismatch(format!(
                "coefficient outside {}",
                self.ring.descriptor()
            )));
        }
        Ok(())
    }

    pub fn add(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let n = f.coeffs.len().max(g.coeffs.len());
        let zero = self.ring.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.ring
                    .add(f.coeffs.get(i).unwrap_or(&zero), g.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        self.poly(coeffs)
    }

    pub fn neg(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.poly(f.coeffs.iter().map(|c| self.ring.neg(c)).collect())
    }

    pub fn sub(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.add(f, &self.neg(g))
    }

    /// `r · f`.
    pub fn scale_left(&self, r: &R::Elem, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        self.poly(f.coeffs.iter().map(|c| self.ring.mul(r, c)).collect())
    }

    /// `x · f`, one application of `x r = τ(r) x + δ(r)` per coefficient.
    pub fn x_times(&self, f: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let mut out = vec![self.ring.zero(); f.coeffs.len() + 1];
        for (k, c) in f.coeffs.iter().enumerate() {
            out[k + 1] = self.ring.add(&out[k + 1], &self.ring.tau(self.twist, c));
            out[k] = self.ring.add(&out[k], &self.ring.delta(self.twist, c));
        }
        self.poly(out)
    }

    pub fn mul(&self, f: &SkewPoly<R::Elem>, g: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let mut acc = self.poly(Vec::new());
        let mut xg = g.clone();
        for (i, c) in f.coeffs.iter().enumerate() {
            if i > 0 {
                xg = self.x_times(&xg);
            }
            if !self.ring.is_zero(c) {
                acc = self.add(&acc, &self.scale_left(c, &xg));
            }
        }
        acc
    }

    /// Checked product: both factors must belong to this extension.
    pub fn skew_mul(
        &self,
        f: &SkewPoly<R::Elem>,
        g: &SkewPoly<R::Elem>,
    ) -> Result<SkewPoly<R::Elem>> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul(f, g))
    }

    /// `x² - a x - b`.
    pub fn relator(&self, qd: &QuadraticData<R::Elem>) -> SkewPoly<R::Elem> {
        self.poly(vec![
            self.ring.neg(&qd.b),
            self.ring.neg(&qd.a),
            self.ring.one(),
        ])
    }

    /// Checks `N r = τ²(r) N` on the ring's generators and `N x = (x + τ(a) - a) N`,
    /// where `N = x² - a x - b`. The set of `r` satisfying the first identity is
    /// closed under sums and products, so checking generators suffices.
    pub fn compat_check(&self, qd: &QuadraticData<R::Elem>) -> CompatReport {
        let ring = self.ring;
        let t = self.twist;
        let n = self.relator(qd);
        let mut checks = 0;
        for r in ring.generators() {
            checks += 1;
            let lhs = self.mul(&n, &self.constant(r.clone()));
            let tau2 = ring.tau(t, &ring.tau(t, &r));
            let rhs = self.scale_left(&tau2, &n);
            if lhs != rhs {
                return CompatReport {
                    checks,
                    failure: Some(CompatFailure {
                        identity: format!("N*r = tau^2(r)*N at r = {}", ring.format(&r)),
                        lhs: self.format(&lhs),
                        rhs: self.format(&rhs),
                    }),
                };
            }
        }
        checks += 1;
        let lhs = self.mul(&n, &self.x());
        let shift = ring.sub(&ring.tau(t, &qd.a), &qd.a);
        let factor = self.poly(vec![shift, ring.one()]);
        let rhs = self.mul(&factor, &n);
        let failure = (lhs != rhs).then(|| CompatFailure {
            identity: "N*x = (x + tau(a) - a)*N".into(),
            lhs: self.format(&lhs),
            rhs: self.format(&rhs),
        });
        CompatReport { checks, failure }
    }

    /// The representative `r₀ + r₁ x` of `f` modulo the left ideal generated by `x² - a x - b`.
    pub fn quotient_reduce(
        &self,
        f: &SkewPoly<R::Elem>,
        qd: &QuadraticData<R::Elem>,
    ) -> Result<SkewPoly<R::Elem>> {
        self.check(f)?;
        let n = self.relator(qd);
        let mut f = f.clone();
        while let Some(d) = f.degree().filter(|&d| d >= 2) {
            // c x^d = c x^{d-2} (x² - a x - b) + lower terms.
            let c = f.coeffs[d].clone();
            let m = self.mul(&self.monomial(c, d - 2), &n);
            f = self.sub(&f, &m);
        }
        Ok(f)
    }

    /// Text form `(c2)*x^2 + (c1)*x + (c0)`, highest degree first.
    pub fn format(&self, f: &SkewPoly<R::Elem>) -> String {
        let var = if self.twist == Twist::One { "x" } else { "y" };
        join_terms(
            f.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !self.ring.is_zero(c))
                .map(|(i, c)| {
                    let mono = match i {
                        0 => String::new(),
                        1 => var.to_string(),
                        _ => format!("{var}^{i}"),
                    };
                    coefficient_term(&self.ring.format(c), &mono)
                }),
        )
    }
}

/// Data `(a, b)` of the relator `x² - a x - b` in `R[x; τ, δ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticData<E> {
    pub a: E,
    pub b: E,
    pub twist: Twist,
}

impl<E> QuadraticData<E> {
    pub fn new(a: E, b: E, twist: Twist) -> Self {
        QuadraticData { a, b, twist }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatFailure {
    pub identity: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of the normality check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport {
    /// Number of identities evaluated (stops at the first failure).
    pub checks: usize,
    pub failure: Option<CompatFailure>,
}

impl CompatReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Runs the normality check for `qd` in `R[x; τ, δ]` with the twist named by `qd`.
pub fn quadratic_compat_check<R: BaseRing>(ring: &R, qd: &QuadraticData<R::Elem>) -> CompatReport {
    OreExtension::new(ring, qd.twist).compat_check(qd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{FieldPreset, QuantumTorus};

    #[test]
    fn commutation_examples() {
        let r = QuantumTorus::generic();
        let ext = OreExtension::new(&r, Twist::One);
        let p = ext.mul(&ext.x(), &ext.constant(r.z(1)));
        let alpha = r.scalar(r.scalars().alpha());
        let expected = ext.poly(vec![
            r.neg(&r.mul(&alpha, &r.add(&r.z(1), &r.z(2)))),
            r.z(2),
        ]);
        assert_eq!(p, expected);
        let p3 = ext.mul(&ext.x(), &ext.constant(r.z(3)));
        assert_eq!(p3, ext.monomial(r.z(3), 1));
        assert_eq!(ext.format(&p3), "z3*x");
    }

    #[test]
    fn daha_quadratics_are_normal() {
        let r = QuantumTorus::generic();
        let beta = r.scalars().beta();
        let b = r.scalar(&beta * &beta);
        let q1 = QuadraticData::new(r.zero(), b, Twist::One);
        assert!(quadratic_compat_check(&r, &q1).passed());
        let q2 = QuadraticData::new(r.zero(), r.mono([0, 0, -1]), Twist::Two);
        assert!(quadratic_compat_check(&r, &q2).passed());
    }

    #[test]
    fn crafted_negative_fails_at_z1() {
        let r = QuantumTorus::generic();
        let bad = QuadraticData::new(r.zero(), r.z(1), Twist::Two);
        let report = quadratic_compat_check(&r, &bad);
        let f = report.failure.expect("must fail");
        assert!(f.identity.contains("r = z1"), "{}", f.identity);
    }

    #[test]
    fn field_presets_are_normal() {
        for f in [FieldPreset::qs_order2(), FieldPreset::f2s_dds()] {
            let s = f.s();
            let b = &s * &s;
            let d = &b + &f.one();
            for qd in [
                QuadraticData::new(f.zero(), b.clone(), Twist::One),
                QuadraticData::new(f.zero(), d, Twist::Two),
            ] {
                assert!(quadratic_compat_check(&f, &qd).passed());
            }
            // x² - s is not normal: τ or δ moves s.
            let bad = QuadraticData::new(f.zero(), s, Twist::One);
            assert!(!quadratic_compat_check(&f, &bad).passed());
        }
    }

    #[test]
    fn quotient_reduction() {
        let r = QuantumTorus::generic();
        let ext = OreExtension::new(&r, Twist::One);
        let beta = r.scalars().beta();
        let b2 = r.scalar(&beta * &beta);
        let qd = QuadraticData::new(r.zero(), b2.clone(), Twist::One);
        let x2 = ext.monomial(r.one(), 2);
        assert_eq!(ext.quotient_reduce(&x2, &qd).unwrap(), ext.constant(b2.clone()));
        let x3 = ext.monomial(r.one(), 3);
        assert_eq!(ext.quotient_reduce(&x3, &qd).unwrap(), ext.monomial(b2, 1));
        let lin = ext.poly(vec![r.z(1), r.z(3)]);
        assert_eq!(ext.quotient_reduce(&lin, &qd).unwrap(), lin);
    }

    #[test]
    fn context_mismatch_is_reported() {
        let r = QuantumTorus::generic();
        let one = OreExtension::new(&r, Twist::One);
        let two = OreExtension::new(&r, Twist::Two);
        assert!(one.skew_mul(&one.x(), &two.x()).is_err());
    }
}
