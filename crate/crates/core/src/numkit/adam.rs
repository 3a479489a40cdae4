//! Adam optimizer state and update step.
//!
//! Coordinates whose incoming gradient is exactly zero are left untouched,
//! moments included. A parameter that never receives gradient therefore
//! never moves, which is the behaviour embedding tables rely on when a
//! mini-batch only touches a few rows.

#[derive(Debug, Clone)]
pub struct AdamState {
    pub m: Vec<f32>,
    pub v: Vec<f32>,
    pub t: u64,
    pub beta1: f32,
    pub beta2: f32,
    pub epsilon: f32,
}

impl AdamState {
    pub fn new(len: usize) -> Self {
        AdamState {
            m: vec![0.0; len],
            v: vec![0.0; len],
            t: 0,
            beta1: 0.9,
            beta2: 0.999,
            epsilon: 1e-8,
        }
    }
}

/// One Adam update with bias correction. `t` increments by exactly 1.
pub fn adam_step(params: &mut [f32], grads: &[f32], state: &mut AdamState, lr: f32) {
    assert_eq!(params.len(), grads.len(), "adam: grads shape mismatch");
    assert_eq!(params.len(), state.m.len(), "adam: state shape mismatch");
    state.t += 1;
    let c1 = 1.0 - (state.beta1 as f64).powi(state.t as i32);
    let c2 = 1.0 - (state.beta2 as f64).powi(state.t as i32);
    let b1 = state.beta1;
    let b2 = state.beta2;
    for i in 0..params.len() {
        let g = grads[i];
        if g == 0.0 {
            continue;
        }
        let m = b1 * state.m[i] + (1.0 - b1) * g;
        let v = b2 * state.v[i] + (1.0 - b2) * g * g;
        state.m[i] = m;
        state.v[i] = v;
        let m_hat = m as f64 / c1;
        let v_hat = v as f64 / c2;
        params[i] -= (lr as f64 * m_hat / (v_hat.sqrt() + state.epsilon as f64)) as f32;
    }
}
