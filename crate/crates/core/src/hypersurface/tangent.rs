use num_complex::Complex64;
use serde::Serialize;

/// `X = aV + bW + cZ0 + tH` with complex `a, b, c` and real `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangentVector {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub t: f64,
}

impl TangentVector {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, t: f64) -> Self {
        Self { a, b, c, t }
    }

    /// From real coordinates in the basis `(V, iV, W, iW, Z0, iZ0, H)`.
    pub fn from_coords(x: &[f64; 7]) -> Self {
        Self {
            a: Complex64::new(x[0], x[1]),
            b: Complex64::new(x[2], x[3]),
            c: Complex64::new(x[4], x[5]),
            t: x[6],
        }
    }

    /// The `index`-th element of the orthonormal basis `(V, iV, W, iW, Z0, iZ0, H)`.
    pub fn basis(index: usize) -> Self {
        let mut x = [0.0; 7];
        x[index] = 1.0;
        Self::from_coords(&x)
    }

    pub fn coords(&self) -> [f64; 7] {
        [
            self.a.re, self.a.im, self.b.re, self.b.im, self.c.re, self.c.im, self.t,
        ]
    }

    /// `|a|^2 + |b|^2 + |c|^2 + t^2`, the squared `<.,.>_s` norm.
    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.t * self.t
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.a * s, self.b * s, self.c * s, self.t * s)
    }

    pub fn normalized(&self) -> Self {
        self.scale(1.0 / self.norm_sqr().sqrt())
    }
}
