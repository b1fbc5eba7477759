use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::subsets::{check_cap, max_k, GrayCode};

use super::linalg::rank;
use super::{support_mask, BlackBoxPoly, MultiPoly};

/// Anything that can be evaluated at points and carries a degree bound.
pub trait PolyOracle<R: Ring> {
    fn ring(&self) -> &R;
    fn nvars(&self) -> usize;
    /// Upper bound on the total degree; `None` for the zero polynomial.
    fn degree_bound(&self) -> Option<usize>;
    fn evaluate(&self, point: &[R::Elem]) -> R::Elem;

    /// `f(𝟙_I)` for every mask `I < 2^k`.
    fn indicator_values(&self) -> Result<Vec<R::Elem>> {
        let ring = self.ring();
        check_cap(self.nvars(), max_k())?;
        let mut out = vec![ring.zero(); 1 << self.nvars()];
        let mut point = vec![ring.zero(); self.nvars()];
        for step in GrayCode::new(self.nvars()) {
            if let Some((bit, on)) = step.flip {
                point[bit] = if on { ring.one() } else { ring.zero() };
            }
            out[step.mask as usize] = self.evaluate(&point);
        }
        Ok(out)
    }
}

/// In-place subset-sum transform: `v[I] ← Σ_{T⊆I} v[T]`.
pub fn zeta_transform<R: Ring>(ring: &R, v: &mut [R::Elem]) {
    let mut bit = 1;
    while bit < v.len() {
        for i in 0..v.len() {
            if i & bit != 0 {
                v[i] = ring.add(&v[i], &v[i ^ bit]);
            }
        }
        bit <<= 1;
    }
}

/// Inverse of [`zeta_transform`]: `v[I] ← Σ_{T⊆I} (−1)^{|I|−|T|} v[T]`.
pub fn mobius_transform<R: Ring>(ring: &R, v: &mut [R::Elem]) {
    let mut bit = 1;
    while bit < v.len() {
        for i in 0..v.len() {
            if i & bit != 0 {
                v[i] = ring.sub(&v[i], &v[i ^ bit]);
            }
        }
        bit <<= 1;
    }
}

impl<R: Ring> PolyOracle<R> for MultiPoly<R> {
    fn ring(&self) -> &R {
        MultiPoly::ring(self)
    }
    fn nvars(&self) -> usize {
        MultiPoly::nvars(self)
    }
    fn degree_bound(&self) -> Option<usize> {
        self.degree()
    }
    fn evaluate(&self, point: &[R::Elem]) -> R::Elem {
        self.eval(point)
    }

    /// Sums coefficients by support, then takes subset sums.
    fn indicator_values(&self) -> Result<Vec<R::Elem>> {
        let ring = MultiPoly::ring(self);
        check_cap(MultiPoly::nvars(self), max_k())?;
        let mut v = vec![ring.zero(); 1 << MultiPoly::nvars(self)];
        for (e, c) in self.terms() {
            let t = support_mask(e) as usize;
            v[t] = ring.add(&v[t], c);
        }
        zeta_transform(ring, &mut v);
        Ok(v)
    }
}

impl<R: Ring> PolyOracle<R> for BlackBoxPoly<R> {
    fn ring(&self) -> &R {
        BlackBoxPoly::ring(self)
    }
    fn nvars(&self) -> usize {
        BlackBoxPoly::nvars(self)
    }
    fn degree_bound(&self) -> Option<usize> {
        BlackBoxPoly::degree_bound(self)
    }
    fn evaluate(&self, point: &[R::Elem]) -> R::Elem {
        self.eval(point)
    }
}

fn check_index_set(j: &[usize], k: usize) -> Result<()> {
    let mut seen = vec![false; k];
    for &s in j {
        if s >= k {
            return Err(Error::invalid(format!("index {} is outside [1, {k}]", s + 1)));
        }
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::invalid(format!("index {} repeated", s + 1)));
        }
    }
    Ok(())
}

/// `Σ_{I⊆J} (−1)^{|J|−|I|} f(𝟙_I)`, which equals the coefficient of
/// `∏_{j∈J} x_j` whenever `deg f ≤ |J|`. Indices are 0-based.
pub fn coeff_by_subsets<R: Ring, P: PolyOracle<R>>(f: &P, j: &[usize]) -> Result<R::Elem> {
    let ring = f.ring();
    check_index_set(j, f.nvars())?;
    let Some(deg) = f.degree_bound() else {
        return Ok(ring.zero());
    };
    if deg > j.len() {
        return Err(Error::FormulaInapplicable { degree: deg, j: j.len() });
    }
    check_cap(j.len(), max_k())?;
    let mut point = vec![ring.zero(); f.nvars()];
    let (mut even, mut odd) = (ring.zero(), ring.zero());
    for step in GrayCode::new(j.len()) {
        if let Some((bit, on)) = step.flip {
            point[j[bit]] = if on { ring.one() } else { ring.zero() };
        }
        let v = f.evaluate(&point);
        if (j.len() - step.mask.count_ones() as usize).is_multiple_of(2) {
            even = ring.add(&even, &v);
        } else {
            odd = ring.add(&odd, &v);
        }
    }
    Ok(ring.sub(&even, &odd))
}

/// `Σ_{I⊆[1,k]} (−1)^{|I|} (Σ_{s∈I} c_s)^n`, summing and multiplying left to
/// right in index order. Vanishes for `n < k`.
pub fn escott_sum<R: Ring>(ring: &R, c: &[R::Elem], n: u32) -> Result<R::Elem> {
    check_cap(c.len(), max_k())?;
    let mut total = ring.zero();
    for mask in 0..1u64 << c.len() {
        let mut s = ring.zero();
        for (i, ci) in c.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = ring.add(&s, ci);
            }
        }
        let mut term = ring.one();
        for _ in 0..n {
            term = ring.mul(&term, &s);
        }
        total = if mask.count_ones() % 2 == 0 { ring.add(&total, &term) } else { ring.sub(&total, &term) };
    }
    Ok(total)
}

/// Whether the `2^k` functions `χ_I(x) = ∏_{s∈I} x_s` are linearly
/// independent on `{0,1}^k` over `field`.
pub fn chi_basis_independence<F: Field>(field: &F, k: usize) -> Result<bool> {
    check_cap(k, 5)?;
    let size = 1usize << k;
    let rows: Vec<Vec<F::Elem>> = (0..size)
        .map(|i| (0..size).map(|x| if i & !x == 0 { field.one() } else { field.zero() }).collect())
        .collect();
    Ok(rank(field, rows) == size)
}

/// Finds `a_s ∈ X_s` with `f(a) ≠ 0` for a polynomial whose degree is `|J|`,
/// where `J` lists the positions with two-element sets.
///
/// With `b_s`, `c_s` the first and second elements of `X_s`, the scan runs
/// over `I ⊆ J` by increasing bitmask (over positions in `J`) and evaluates
/// `f̄(𝟙_I) = f(b + (c − b)·𝟙_I)`; the first nonzero value is returned. The
/// same evaluations give the leading coefficient of `f̄`, which must be
/// nonzero.
pub fn cn_witness<R: Ring, P: PolyOracle<R>>(
    f: &P,
    x: &[Vec<R::Elem>],
    j: &[usize],
) -> Result<Option<Vec<R::Elem>>> {
    let ring = f.ring();
    let k = f.nvars();
    if x.len() != k {
        return Err(Error::invalid(format!("expected {k} sets, got {}", x.len())));
    }
    check_index_set(j, k)?;
    for (s, xs) in x.iter().enumerate() {
        match xs.len() {
            1 => {}
            2 if xs[0] != xs[1] => {}
            2 => return Err(Error::invalid(format!("set {} repeats its element", s + 1))),
            n => return Err(Error::invalid(format!("set {} has {n} elements; 1 or 2 expected", s + 1))),
        }
    }
    if let Some(&s) = j.iter().find(|&&s| x[s].len() != 2) {
        return Err(Error::invalid(format!("index {} is in J but its set is a singleton", s + 1)));
    }
    if let Some(deg) = f.degree_bound() {
        if deg > j.len() {
            return Err(Error::FormulaInapplicable { degree: deg, j: j.len() });
        }
    }
    check_cap(j.len(), max_k())?;
    let base: Vec<R::Elem> = x.iter().map(|xs| xs[0].clone()).collect();
    let mut witness = None;
    let (mut even, mut odd) = (ring.zero(), ring.zero());
    for mask in 0..1u64 << j.len() {
        let mut point = base.clone();
        for (bit, &s) in j.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                point[s] = x[s][1].clone();
            }
        }
        let v = f.evaluate(&point);
        if witness.is_none() && !ring.is_zero(&v) {
            witness = Some(point);
        }
        if (j.len() - mask.count_ones() as usize).is_multiple_of(2) {
            even = ring.add(&even, &v);
        } else {
            odd = ring.add(&odd, &v);
        }
    }
    if ring.is_zero(&ring.sub(&even, &odd)) {
        return Err(Error::HypothesisFails("the coefficient of the product over J vanishes".into()));
    }
    Ok(witness)
}

/// Replaces each `x_i` by a sum of `l_i` fresh variables. The coefficient of
/// the product of all fresh variables equals `l_1!⋯l_k!·[x^l]f`.
pub fn split_variables<R: Ring>(f: &MultiPoly<R>, l: &[u32]) -> Result<MultiPoly<R>> {
    if l.len() != f.nvars() {
        return Err(Error::invalid("one multiplicity per variable is required"));
    }
    let total: usize = l.iter().map(|&x| x as usize).sum();
    let ring = f.ring().clone();
    let mut next = 0;
    let images: Vec<MultiPoly<R>> = l
        .iter()
        .map(|&li| {
            let mut g = MultiPoly::zero(ring.clone(), total);
            for _ in 0..li {
                g = g.add(&MultiPoly::var(ring.clone(), total, next));
                next += 1;
            }
            g
        })
        .collect();
    f.substitute(&images)
}
