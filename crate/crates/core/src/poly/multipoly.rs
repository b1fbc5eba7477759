use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::arith::Ring;
use crate::error::{Error, Result};

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

/// Sparse polynomial in `k` variables over a runtime ring. Zero
/// coefficients are never stored.
#[derive(Clone)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    nvars: usize,
    terms: BTreeMap<Exponent, R::Elem>,
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.terms == other.terms
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: R, nvars: usize) -> Self {
        MultiPoly { ring, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, nvars: usize, c: R::Elem) -> Self {
        let mut p = Self::zero(ring, nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(ring: R, nvars: usize) -> Self {
        let one = ring.one();
        Self::constant(ring, nvars, one)
    }

    /// The variable `x_i` (0-based).
    pub fn var(ring: R, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let one = ring.one();
        let mut p = Self::zero(ring, nvars);
        p.add_term(e, one);
        p
    }

    pub fn from_terms<I>(ring: R, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, R::Elem)>,
    {
        let mut p = Self::zero(ring, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::invalid(format!("exponent {e:?} has wrong length for {nvars} variables")));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Adds `c · x^e` in place.
    pub fn add_term(&mut self, e: Exponent, c: R::Elem) {
        debug_assert_eq!(e.len(), self.nvars);
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let sum = self.ring.add(old, &c);
                if self.ring.is_zero(&sum) {
                    self.terms.remove(&e);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &R::Elem)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn coeff(&self, e: &[u32]) -> Result<R::Elem> {
        if e.len() != self.nvars {
            return Err(Error::invalid(format!(
                "exponent vector has length {} but the polynomial has {} variables",
                e.len(),
                self.nvars
            )));
        }
        Ok(self.terms.get(e).cloned().unwrap_or_else(|| self.ring.zero()))
    }

    /// Coefficient of `∏_{j ∈ mask} x_j`.
    pub fn squarefree_coeff(&self, mask: u64) -> R::Elem {
        let e: Exponent = (0..self.nvars).map(|i| (mask >> i & 1) as u32).collect();
        self.terms.get(&e).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), self.ring.neg(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.ring.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring.clone(), self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, self.ring.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.ring.clone(), self.nvars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.nvars, "evaluation point has the wrong length");
        let r = &self.ring;
        let mut acc = r.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = r.mul(&t, &r.pow(x, k as u64));
                }
            }
            acc = r.add(&acc, &t);
        }
        acc
    }

    /// `f(𝟙_I)`: the sum of coefficients whose support lies inside `mask`.
    pub fn eval_indicator(&self, mask: u64) -> R::Elem {
        let r = &self.ring;
        self.terms
            .iter()
            .filter(|(e, _)| support_mask(e) & !mask == 0)
            .fold(r.zero(), |acc, (_, c)| r.add(&acc, c))
    }

    /// Composition `f(g_1, …, g_k)`; the `g_i` share a variable count.
    pub fn substitute(&self, images: &[MultiPoly<R>]) -> Result<MultiPoly<R>> {
        if images.len() != self.nvars {
            return Err(Error::invalid("one image per variable is required"));
        }
        let target = images.first().map_or(0, |g| g.nvars);
        if images.iter().any(|g| g.nvars != target) {
            return Err(Error::invalid("images must share a variable count"));
        }
        let mut out = MultiPoly::zero(self.ring.clone(), target);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(self.ring.clone(), target, c.clone());
            for (g, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = t.mul(&g.pow(k));
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// `x_s ↦ b_s + (c_s − b_s) x_s`.
    pub fn affine_substitute(&self, b: &[R::Elem], c: &[R::Elem]) -> Result<MultiPoly<R>> {
        if b.len() != self.nvars || c.len() != self.nvars {
            return Err(Error::invalid("affine substitution needs one pair per variable"));
        }
        let r = &self.ring;
        let images: Vec<_> = (0..self.nvars)
            .map(|s| {
                let lin = MultiPoly::var(r.clone(), self.nvars, s).scale(&r.sub(&c[s], &b[s]));
                lin.add(&MultiPoly::constant(r.clone(), self.nvars, b[s].clone()))
            })
            .collect();
        self.substitute(&images)
    }

    pub fn to_black_box(&self) -> super::BlackBoxPoly<R>
    where
        R: 'static,
    {
        let me = Arc::new(self.clone());
        super::BlackBoxPoly::new(self.ring.clone(), self.nvars, self.degree(), move |x: &[R::Elem]| me.eval(x))
    }
}

pub fn support_mask(e: &[u32]) -> u64 {
    e.iter().enumerate().filter(|(_, &k)| k > 0).fold(0u64, |acc, (i, _)| acc | 1 << i)
}
