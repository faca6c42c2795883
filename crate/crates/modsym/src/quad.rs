//! Gauss-Legendre rules on [-1, 1], plus cumulative weights that integrate
//! the Lagrange interpolant from -1 up to each node.
//!
//! The cumulative weights make one function-evaluation sweep yield the
//! running integral at every node of a panel, which is what the iterated
//! integrals need: each depth layer integrates against the running values
//! of the previous layer.

/// Nodes and weights of the n-point rule, exact on degree 2n-1.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Chebyshev-like initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    // The cosine guesses run right to left; sort ascending.
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| nodes[a].partial_cmp(&nodes[b]).unwrap());
    let nodes_sorted = idx.iter().map(|&i| nodes[i]).collect();
    let weights_sorted = idx.iter().map(|&i| weights[i]).collect();
    (nodes_sorted, weights_sorted)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// A panel rule: nodes, full weights, and the cumulative weight matrix
/// `cumulative[j][i]`, the integral from -1 to node j of the i-th Lagrange
/// basis polynomial. Exact (to rounding) for integrands of degree < n.
#[derive(Clone, Debug)]
pub struct PanelRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub cumulative: Vec<Vec<f64>>,
}

impl PanelRule {
    pub fn new(n: usize) -> Self {
        let (nodes, weights) = gauss_legendre(n);
        // Integrate each Lagrange basis over [-1, x_j] with an n-point
        // subrule; degree n-1 < 2n-1 keeps this exact.
        let (sub_nodes, sub_weights) = gauss_legendre(n);
        let mut cumulative = vec![vec![0.0; n]; n];
        for j in 0..n {
            let (a, b) = (-1.0, nodes[j]);
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for i in 0..n {
                let mut acc = 0.0;
                for (t, w) in sub_nodes.iter().zip(&sub_weights) {
                    acc += w * lagrange_basis(&nodes, i, mid + half * t);
                }
                cumulative[j][i] = half * acc;
            }
        }
        PanelRule { nodes, weights, cumulative }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn lagrange_basis(nodes: &[f64], i: usize, t: f64) -> f64 {
    let mut v = 1.0;
    for (k, &xk) in nodes.iter().enumerate() {
        if k != i {
            v *= (t - xk) / (nodes[i] - xk);
        }
    }
    v
}
