// Copyright 2026 The robust-search Authors
// SPDX-License-Identifier: Apache-2.0

use super::{search_operator, Algorithm, SearchProblem};
use crate::error::{Error, Result};
use crate::qcore::{apply, StateVector};

/// States `O^q |s>` for `q = 0..=steps`.
pub fn trajectory(p: &SearchProblem, algorithm: Algorithm, steps: usize) -> Vec<StateVector> {
    let op = search_operator(p, algorithm);
    let mut states = Vec::with_capacity(steps + 1);
    let mut current = p.source().clone();
    states.push(current.clone());
    for _ in 0..steps {
        current = apply(&op, &current).expect("operator built from the same problem");
        states.push(current.clone());
    }
    states
}

/// `(q, |<t| O^q |s>|^2)` for `q = 0..=steps`.
pub fn iterate_schedule(p: &SearchProblem, algorithm: Algorithm, steps: usize) -> Result<Vec<(usize, f64)>> {
    if steps == 0 {
        return Err(Error::InvalidConfig("at least one step is required".into()));
    }
    let target = p.target();
    Ok(trajectory(p, algorithm, steps)
        .iter()
        .enumerate()
        .map(|(q, s)| (q, s.amplitude(target).norm_sqr()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplify::uniform_state;
    use std::f64::consts::PI;

    #[test]
    fn uniform_four_item_search_hits_target_at_step_one() {
        let p = SearchProblem::new(uniform_state(2).unwrap(), 3, PI, PI).unwrap();
        let sched = iterate_schedule(&p, Algorithm::Original, 3).unwrap();
        assert_eq!(sched.len(), 4);
        assert!((sched[0].1 - 0.25).abs() < 1e-15);
        assert!((sched[1].1 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn modified_curve_is_even_subsequence_of_original_for_exact_inversions() {
        let s = crate::nmr::prepare_superposition(PI / 6.0).unwrap();
        let p = SearchProblem::new(s, 3, PI, PI).unwrap();
        let original = iterate_schedule(&p, Algorithm::Original, 20).unwrap();
        let modified = iterate_schedule(&p, Algorithm::Modified, 10).unwrap();
        for (q, prob) in modified {
            assert!((prob - original[2 * q].1).abs() < 1e-12);
        }
    }

    #[test]
    fn zero_steps_rejected() {
        let p = SearchProblem::new(uniform_state(2).unwrap(), 3, PI, PI).unwrap();
        assert!(iterate_schedule(&p, Algorithm::Original, 0).is_err());
    }
}
