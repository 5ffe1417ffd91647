//! Minimal double-double arithmetic (an unevaluated sum of two f64, ~31
//! significant digits).
//!
//! The Euler–Maclaurin evaluation of ζ(z,q) and ∂ζ/∂z at negative z adds
//! terms of magnitude up to (N+q)^{|z|} ln(N+q) that cancel down to an O(1)
//! result, so plain binary64 loses most of its digits there.  Running the
//! summation in double-double keeps the final rounded f64 fully accurate for
//! the |z| ≤ ~25 range this crate works in.
//!
//! Algorithms are the classical error-free transformations (Knuth two-sum,
//! FMA-based two-product) plus the usual two-correction division; `exp` uses
//! ln-2 range reduction with a Taylor tail, `ln` one Newton step on top of
//! the f64 logarithm.

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// ln 2 to double-double precision.
pub(crate) const LN2: Dd = Dd {
    hi: 0.6931471805599453,
    lo: 2.3190468138462996e-17,
};

/// ln √(2π) to double-double precision.
pub(crate) const LN_SQRT_2PI: Dd = Dd {
    hi: 0.9189385332046728,
    lo: -3.8782941580672414e-17,
};

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, x);
        let (hi, lo) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi, lo }
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    #[inline]
    pub fn sub_f64(self, x: f64) -> Dd {
        self.add_f64(-x)
    }

    #[inline]
    pub fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let p2 = p2 + self.hi * o.lo + self.lo * o.hi;
        let (hi, lo) = quick_two_sum(p1, p2);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p1, p2 + self.lo * x);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.sub(o.mul_f64(q1));
        let q2 = r.hi / o.hi;
        let r = r.sub(o.mul_f64(q2));
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }.add_f64(q3)
    }

    #[inline]
    pub fn div_f64(self, x: f64) -> Dd {
        self.div(Dd::from_f64(x))
    }

    /// Exact scaling by 2^k.
    #[inline]
    fn ldexp(self, k: i32) -> Dd {
        let s = 2.0f64.powi(k);
        Dd { hi: self.hi * s, lo: self.lo * s }
    }

    /// Integer power by binary exponentiation.
    pub fn powi(self, n: i32) -> Dd {
        if n < 0 {
            return Dd::ONE.div(self.powi(-n));
        }
        let mut base = self;
        let mut acc = Dd::ONE;
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    /// exp(self).  Arguments are assumed well inside the f64 exponent range
    /// (the Euler–Maclaurin engine never leaves |x| < 800).
    pub fn exp(self) -> Dd {
        if self.hi < -745.0 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self.sub(LN2.mul_f64(k));
        // Taylor series of exp(r), |r| <= ln2/2 + eps.
        let mut sum = Dd::ONE.add(r);
        let mut term = r;
        let mut n = 2.0;
        loop {
            term = term.mul(r).div_f64(n);
            sum = sum.add(term);
            if term.hi.abs() < 1e-35 * sum.hi.abs() || n > 40.0 {
                break;
            }
            n += 1.0;
        }
        sum.ldexp(k as i32)
    }

    /// Natural logarithm; requires a strictly positive, finite value.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0);
        let y0 = self.hi.ln();
        // One Newton step: y1 = y0 + x·exp(-y0) − 1 doubles the seed's digits.
        let e = Dd::from_f64(-y0).exp();
        Dd::from_f64(y0).add(self.mul(e)).sub_f64(1.0)
    }

    /// self^p via exp(p ln self); requires self > 0.
    #[cfg(test)]
    pub fn powf(self, p: Dd) -> Dd {
        self.ln().mul(p).exp()
    }
}
