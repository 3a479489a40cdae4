//! Dense layers with hand-written forward/backward passes.
//!
//! A `DenseLayer` computes `y = act(xᵀW + b)` with `W` stored row-major as
//! `in_dim × out_dim`. Backward passes are exact analytic gradients; the
//! ReLU subgradient at exactly 0 is 0.

use rand::Rng;

use super::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    ReLU,
    Linear,
}

impl Activation {
    #[inline]
    pub fn apply(self, z: f32) -> f32 {
        match self {
            Activation::ReLU => {
                if z > 0.0 {
                    z
                } else {
                    0.0
                }
            }
            Activation::Linear => z,
        }
    }

    /// Derivative expressed through the post-activation value. Valid for
    /// ReLU (y > 0 iff z > 0) and Linear.
    #[inline]
    pub fn grad_from_output(self, y: f32) -> f32 {
        match self {
            Activation::ReLU => {
                if y > 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Activation::Linear => 1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Activation::ReLU => "relu",
            Activation::Linear => "linear",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DenseLayer {
    /// in_dim × out_dim, row-major.
    pub weights: Matrix,
    pub bias: Vec<f32>,
    pub activation: Activation,
}

impl DenseLayer {
    /// Glorot-uniform weights, zero bias.
    pub fn new<R: Rng + ?Sized>(
        in_dim: usize,
        out_dim: usize,
        activation: Activation,
        rng: &mut R,
    ) -> Self {
        DenseLayer {
            weights: Matrix::glorot_uniform(in_dim, out_dim, rng),
            bias: vec![0.0; out_dim],
            activation,
        }
    }

    #[inline]
    pub fn in_dim(&self) -> usize {
        self.weights.rows
    }

    #[inline]
    pub fn out_dim(&self) -> usize {
        self.weights.cols
    }

    /// `out = act(xᵀW + b)`. f64 accumulation per output unit. Zero input
    /// components are skipped; adding `0·w` is an exact no-op, so this is
    /// bit-identical to the full loop.
    pub fn forward(&self, x: &[f32], out: &mut [f32]) {
        assert_eq!(x.len(), self.in_dim(), "forward: input dim mismatch");
        assert_eq!(out.len(), self.out_dim(), "forward: output dim mismatch");
        let cols = self.out_dim();
        let mut acc: Vec<f64> = self.bias.iter().map(|&b| b as f64).collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0.0 {
                continue;
            }
            let row = self.weights.row(i);
            for (a, &w) in acc.iter_mut().zip(row) {
                *a += xi as f64 * w as f64;
            }
        }
        for j in 0..cols {
            out[j] = self.activation.apply(acc[j] as f32);
        }
    }

    pub fn forward_alloc(&self, x: &[f32]) -> Vec<f32> {
        let mut out = vec![0.0; self.out_dim()];
        self.forward(x, &mut out);
        out
    }

    /// Backward pass. `x` is the forward input, `y` the forward output.
    /// Accumulates into `grad_w`/`grad_b` (mini-batch friendly); when
    /// `grad_x` is given it is overwritten with dL/dx.
    pub fn backward(
        &self,
        x: &[f32],
        y: &[f32],
        grad_out: &[f32],
        grad_w: &mut [f32],
        grad_b: &mut [f32],
        grad_x: Option<&mut [f32]>,
    ) {
        assert_eq!(x.len(), self.in_dim(), "backward: input dim mismatch");
        assert_eq!(y.len(), self.out_dim(), "backward: cached output missing or wrong size");
        assert_eq!(grad_out.len(), self.out_dim(), "backward: grad_out dim mismatch");
        assert_eq!(grad_w.len(), self.weights.data.len(), "backward: grad_w size mismatch");
        assert_eq!(grad_b.len(), self.out_dim(), "backward: grad_b size mismatch");

        let out_dim = self.out_dim();
        // dz = grad_out ⊙ act'(z), expressed through y.
        let mut dz = vec![0.0f32; out_dim];
        for j in 0..out_dim {
            dz[j] = grad_out[j] * self.activation.grad_from_output(y[j]);
        }
        for (gb, &d) in grad_b.iter_mut().zip(&dz) {
            *gb += d;
        }
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0.0 {
                let grow = &mut grad_w[i * out_dim..(i + 1) * out_dim];
                for (g, &d) in grow.iter_mut().zip(&dz) {
                    *g += xi * d;
                }
            }
        }
        if let Some(gx) = grad_x {
            assert_eq!(gx.len(), self.in_dim(), "backward: grad_x size mismatch");
            for (i, slot) in gx.iter_mut().enumerate() {
                let row = self.weights.row(i);
                let mut acc = 0.0f64;
                for (&w, &d) in row.iter().zip(&dz) {
                    acc += w as f64 * d as f64;
                }
                *slot = acc as f32;
            }
        }
    }

    /// Allocating variant returning `(grad_w, grad_b, grad_x)`.
    pub fn backward_alloc(&self, x: &[f32], y: &[f32], grad_out: &[f32]) -> (Vec<f32>, Vec<f32>, Vec<f32>) {
        let mut gw = vec![0.0; self.weights.data.len()];
        let mut gb = vec![0.0; self.out_dim()];
        let mut gx = vec![0.0; self.in_dim()];
        self.backward(x, y, grad_out, &mut gw, &mut gb, Some(&mut gx));
        (gw, gb, gx)
    }
}

/// Forward pass through a stack of layers, returning every post-activation
/// (caller keeps the original input for the backward pass).
pub fn tower_forward(layers: &[DenseLayer], x: &[f32]) -> Vec<Vec<f32>> {
    let mut acts = Vec::with_capacity(layers.len());
    let mut cur = x;
    for layer in layers {
        let y = layer.forward_alloc(cur);
        acts.push(y);
        cur = acts.last().unwrap();
    }
    acts
}

/// Backward pass through a stack. `acts` must come from `tower_forward` on
/// `x`. Parameter gradients accumulate into `grads` (one `(w, b)` pair per
/// layer); returns dL/dx.
pub fn tower_backward(
    layers: &[DenseLayer],
    x: &[f32],
    acts: &[Vec<f32>],
    grad_out: &[f32],
    grads: &mut [(Vec<f32>, Vec<f32>)],
) -> Vec<f32> {
    assert_eq!(layers.len(), acts.len());
    assert_eq!(layers.len(), grads.len());
    let mut upstream = grad_out.to_vec();
    for l in (0..layers.len()).rev() {
        let input = if l == 0 { x } else { &acts[l - 1] };
        let mut gx = vec![0.0f32; layers[l].in_dim()];
        let (gw, gb) = &mut grads[l];
        layers[l].backward(input, &acts[l], &upstream, gw, gb, Some(&mut gx));
        upstream = gx;
    }
    upstream
}
