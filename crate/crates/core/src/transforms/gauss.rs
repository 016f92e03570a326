use nalgebra::{DMatrix, SymmetricEigen};

/// Gauss-Jacobi rule for `int_{-1}^{1} g(t) (1-t)^a (1+t)^b dt`, nodes
/// ascending, from the eigen-decomposition of the Jacobi matrix.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    assert!(n > 0 && a > -1.0 && b > -1.0);
    let ab = a + b;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        m[(k, k)] = if k == 0 { (b - a) / (ab + 2.0) } else { (b * b - a * a) / (s * (s + 2.0)) };
        if k + 1 < n {
            let j = kf + 1.0;
            let s = 2.0 * j + ab;
            let off = (4.0 * j * (j + a) * (j + b) * (j + ab) / (s * s * (s + 1.0) * (s - 1.0))).sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let total = 2f64.powf(ab + 1.0) * beta_fn(a + 1.0, b + 1.0);
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|i| (eig.eigenvalues[i], total * eig.eigenvectors[(0, i)].powi(2)))
        .collect();
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0));
    pairs.into_iter().unzip()
}

pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    gauss_jacobi(n, 0.0, 0.0)
}

fn beta_fn(x: f64, y: f64) -> f64 {
    use statrs::function::gamma::ln_gamma;
    (ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp()
}

/// Composite rule for `int_0^R g(x) x^p dx` with `p > -1`: a Gauss-Jacobi
/// panel absorbs `x^p` at the origin, Gauss-Legendre panels the rest.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl WeightedRule {
    pub fn new(cutoff: f64, panels: usize, order: usize, power: f64) -> Self {
        let h = cutoff / panels as f64;
        let mut nodes = Vec::with_capacity(panels * order);
        let mut weights = Vec::with_capacity(panels * order);
        let (jt, jw) = gauss_jacobi(order, 0.0, power);
        let scale = (h / 2.0).powf(power + 1.0);
        for (t, w) in jt.iter().zip(&jw) {
            nodes.push(h * (1.0 + t) / 2.0);
            weights.push(w * scale);
        }
        let (lt, lw) = gauss_legendre(order);
        for p in 1..panels {
            let lo = p as f64 * h;
            for (t, w) in lt.iter().zip(&lw) {
                let x = lo + h * (1.0 + t) / 2.0;
                nodes.push(x);
                weights.push(w * h / 2.0 * x.powf(power));
            }
        }
        Self { nodes, weights }
    }

    pub fn integrate(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, w)| w * g(x)).sum()
    }
}
