//! Softmax, cross-entropy, and the fused analytic gradient.

use crate::error::{Error, Result};

/// Additive floor inside the log of [`cross_entropy`], so a saturated
/// probability of exactly zero stays finite.
pub const LOG_FLOOR: f64 = 1e-12;

/// Probability vector over classes: entries in [0, 1], summing to 1
/// within 1e-9.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    probs: Vec<f64>,
}

impl ProbVector {
    /// Validating constructor for externally supplied probabilities.
    pub fn from_vec(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::ShapeMismatch("empty probability vector".into()));
        }
        if probs.iter().any(|p| !(0.0..=1.0).contains(p)) {
            return Err(Error::ShapeMismatch("probability outside [0,1]".into()));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return Err(Error::ShapeMismatch(format!(
                "probabilities sum to {sum}, not 1"
            )));
        }
        Ok(ProbVector { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Index of the largest probability; ties resolve to the lowest index.
    pub fn argmax(&self) -> usize {
        argmax(&self.probs)
    }
}

/// Lowest-index argmax. Deterministic under ties by construction.
pub fn argmax(xs: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in xs.iter().enumerate().skip(1) {
        if x > xs[best] {
            best = i;
        }
    }
    best
}

/// Numerically stable softmax with max-subtraction.
///
/// The argmax of the output equals the argmax of the input, including
/// tie patterns: equal logits map to equal probabilities.
pub fn softmax(logits: &[f64]) -> Result<ProbVector> {
    if logits.is_empty() {
        return Err(Error::ShapeMismatch("empty logits".into()));
    }
    if logits.iter().any(|l| !l.is_finite()) {
        return Err(Error::NonFiniteLogits);
    }
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut exps: Vec<f64> = logits.iter().map(|&l| (l - max).exp()).collect();
    let sum: f64 = exps.iter().sum();
    for e in exps.iter_mut() {
        *e /= sum;
    }
    Ok(ProbVector { probs: exps })
}

/// Cross-entropy of `p` against a hard label: `-ln(p[label] + LOG_FLOOR)`.
pub fn cross_entropy(p: &ProbVector, label: usize) -> Result<f64> {
    if label >= p.len() {
        return Err(Error::LabelOutOfRange {
            label,
            num_classes: p.len(),
        });
    }
    Ok(-(p.probs[label] + LOG_FLOOR).ln())
}

/// Gradient of `cross_entropy(softmax(logits), label)` with respect to the
/// logits: `softmax(logits) - one_hot(label)`.
pub fn ce_softmax_gradient(logits: &[f64], label: usize) -> Result<Vec<f64>> {
    if label >= logits.len() {
        return Err(Error::LabelOutOfRange {
            label,
            num_classes: logits.len(),
        });
    }
    let p = softmax(logits)?;
    let mut g = p.probs;
    g[label] -= 1.0;
    Ok(g)
}
