use std::fmt;
use std::sync::Arc;

use crate::arith::Ring;

type Evaluator<E> = Arc<dyn Fn(&[E]) -> E + Send + Sync>;

/// A polynomial known only through evaluations, plus a caller-asserted
/// bound on its total degree (`None` means the zero polynomial).
#[derive(Clone)]
pub struct BlackBoxPoly<R: Ring> {
    ring: R,
    nvars: usize,
    degree_bound: Option<usize>,
    eval: Evaluator<R::Elem>,
}

impl<R: Ring> fmt::Debug for BlackBoxPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BlackBoxPoly")
            .field("nvars", &self.nvars)
            .field("degree_bound", &self.degree_bound)
            .finish_non_exhaustive()
    }
}

impl<R: Ring> BlackBoxPoly<R> {
    pub fn new<F>(ring: R, nvars: usize, degree_bound: Option<usize>, f: F) -> Self
    where
        F: Fn(&[R::Elem]) -> R::Elem + Send + Sync + 'static,
    {
        BlackBoxPoly { ring, nvars, degree_bound, eval: Arc::new(f) }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_bound(&self) -> Option<usize> {
        self.degree_bound
    }

    pub fn eval(&self, point: &[R::Elem]) -> R::Elem {
        assert_eq!(point.len(), self.nvars, "evaluation point has the wrong length");
        (self.eval)(point)
    }

    /// `f(𝟙_I)` for the subset encoded by `mask`.
    pub fn eval_indicator(&self, mask: u64) -> R::Elem {
        let point: Vec<R::Elem> = (0..self.nvars)
            .map(|i| if mask >> i & 1 == 1 { self.ring.one() } else { self.ring.zero() })
            .collect();
        self.eval(&point)
    }
}
