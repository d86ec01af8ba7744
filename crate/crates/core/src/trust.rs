//! Trust carried along a recommendation path.
//!
//! Values live on the continuous scale `[0, 4]`, where 4 is full trust. A
//! recommender with value `r` passes on `r / 4` of whatever trust reaches it,
//! so a chain of fully trusted recommenders is lossless.

use thiserror::Error;

/// Full trust.
pub const MAX_TRUST: f64 = 4.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TrustError {
    #[error("recommender value {value} at index {index} is outside [0, 4]")]
    Recommender { index: usize, value: f64 },
    #[error("target value {0} is outside [0, 4]")]
    Target(f64),
    #[error("cannot parse trust value {text:?} at index {index}")]
    Parse { index: usize, text: String },
}

fn in_range(x: f64) -> bool {
    (0.0..=MAX_TRUST).contains(&x)
}

/// Recommender values `rtv(1..n)` followed by the target's value `tv(T)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrustPath {
    recommenders: Vec<f64>,
    target: f64,
}

impl TrustPath {
    pub fn new(recommenders: Vec<f64>, target: f64) -> Result<Self, TrustError> {
        check_recommenders(&recommenders)?;
        if !in_range(target) {
            return Err(TrustError::Target(target));
        }
        Ok(TrustPath {
            recommenders,
            target,
        })
    }

    /// Direct trust, no recommenders.
    pub fn direct(target: f64) -> Result<Self, TrustError> {
        Self::new(Vec::new(), target)
    }

    pub fn recommender_values(&self) -> &[f64] {
        &self.recommenders
    }

    pub fn target_value(&self) -> f64 {
        self.target
    }
}

fn check_recommenders(values: &[f64]) -> Result<(), TrustError> {
    match values.iter().position(|&r| !in_range(r)) {
        Some(index) => Err(TrustError::Recommender {
            index,
            value: values[index],
        }),
        None => Ok(()),
    }
}

/// `tv(T) * (rtv(1)/4) * ... * (rtv(n)/4)`.
///
/// Factors are multiplied in ascending order, so the result is bit-identical
/// for every ordering of the recommenders.
pub fn trust_value(path: &TrustPath) -> f64 {
    let mut factors = path.recommenders.clone();
    factors.sort_by(f64::total_cmp);
    factors
        .iter()
        .fold(path.target, |acc, &r| acc * (r / MAX_TRUST))
}

/// Prepends `prefix` recommenders to `suffix`, keeping its target.
pub fn compose_paths(prefix: &[f64], suffix: &TrustPath) -> Result<TrustPath, TrustError> {
    check_recommenders(prefix)?;
    let mut recommenders = prefix.to_vec();
    recommenders.extend_from_slice(&suffix.recommenders);
    Ok(TrustPath {
        recommenders,
        target: suffix.target,
    })
}

/// Parses `"4,3.5,2"`. Whitespace around items is allowed; an empty string is
/// an empty list.
pub fn parse_trust_list(text: &str) -> Result<Vec<f64>, TrustError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let values = text
        .split(',')
        .enumerate()
        .map(|(index, item)| {
            item.trim().parse::<f64>().map_err(|_| TrustError::Parse {
                index,
                text: item.to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    check_recommenders(&values)?;
    Ok(values)
}
