use nalgebra::DMatrix;

/// A coordinate-chart metric field: a dimension, a component function from
/// chart points to symmetric matrices, and a domain predicate. Component
/// functions must be pure; the engine may evaluate them from many points.
pub struct ChartMetric {
    dim: usize,
    components: Box<dyn Fn(&[f64]) -> DMatrix<f64> + Send + Sync>,
    domain: Box<dyn Fn(&[f64]) -> bool + Send + Sync>,
}

impl ChartMetric {
    pub fn new(
        dim: usize,
        components: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static,
    ) -> Self {
        ChartMetric {
            dim,
            components: Box::new(components),
            domain: Box::new(|_| true),
        }
    }

    pub fn with_domain(
        dim: usize,
        components: impl Fn(&[f64]) -> DMatrix<f64> + Send + Sync + 'static,
        domain: impl Fn(&[f64]) -> bool + Send + Sync + 'static,
    ) -> Self {
        ChartMetric {
            dim,
            components: Box::new(components),
            domain: Box::new(domain),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval(&self, x: &[f64]) -> DMatrix<f64> {
        debug_assert_eq!(x.len(), self.dim);
        (self.components)(x)
    }

    pub fn in_domain(&self, x: &[f64]) -> bool {
        x.len() == self.dim && (self.domain)(x)
    }

    /// Symmetry defect and smallest eigenvalue at a point; diagnostics for
    /// the invariants of the type.
    pub fn pointwise_diagnostics(&self, x: &[f64]) -> (f64, f64) {
        let g = self.eval(x);
        let sym = (&g - g.transpose()).norm();
        let min_eig = g
            .clone()
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        (sym, min_eig)
    }
}
