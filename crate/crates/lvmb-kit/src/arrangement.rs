//! Combinatorics of the excluded subspace union and of vanishing loci of
//! diagonal fields.
//!
//! Membership of a point in the open set `V` (the projective space minus
//! the excluded union) depends only on which coordinates of the point
//! vanish, so points enter this module as index sets, never as numbers.
//! A diagonal field `sum_i alpha_i z_i d/dz_i` vanishes exactly where all
//! coordinates in the support of `alpha` are zero; whether that locus
//! meets `V` is again a pure containment question because a coordinate
//! subspace lies in a finite union of coordinate subspaces if and only if
//! it lies in a single member.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::config::LVMBConfig;
use crate::linalg::GaussianRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("subset of coordinate indices must be nonempty")]
    EmptySubset,
    #[error("a projective point must have a nonzero coordinate")]
    AllCoordinatesZero,
    #[error("the zero field has no support")]
    ZeroField,
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// Exact coefficient vector of a diagonal field `sum_i alpha_i z_i d/dz_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FundamentalField {
    pub alpha: Vec<GaussianRational>,
}

impl FundamentalField {
    pub fn new(alpha: Vec<GaussianRational>) -> Self {
        Self { alpha }
    }

    /// The coordinate field `z_i d/dz_i` (1-based index) in an `n`-vector.
    pub fn coordinate(n: usize, index: usize) -> Self {
        let mut alpha = vec![GaussianRational::from_int(0); n];
        alpha[index - 1] = GaussianRational::from_int(1);
        Self { alpha }
    }

    /// 1-based indices where the coefficient is nonzero (exact comparison).
    pub fn support(&self) -> BTreeSet<usize> {
        self.alpha
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Number of coordinate hyperplanes inside the excluded union: the count
/// of singleton generators of the minimal antichain.
pub fn k_count(cfg: &LVMBConfig) -> usize {
    cfg.excluded().singleton_indices().len()
}

/// Whether the coordinate subspace `{z_i = 0 for i in subset}` lies inside
/// the excluded union, i.e. some generator is contained in `subset`.
pub fn subspace_contained_in_e(
    cfg: &LVMBConfig,
    subset: &BTreeSet<usize>,
) -> Result<bool, ArrangementError> {
    if subset.is_empty() {
        return Err(ArrangementError::EmptySubset);
    }
    check_range(cfg, subset)?;
    Ok(cfg.excluded().covers(subset))
}

/// Whether a point with the given zero coordinates lies in `V`. The empty
/// zero set means a torus point, which always lies in `V`.
pub fn point_in_v(cfg: &LVMBConfig, zero_support: &BTreeSet<usize>) -> Result<bool, ArrangementError> {
    check_range(cfg, zero_support)?;
    if zero_support.len() == cfg.n() {
        return Err(ArrangementError::AllCoordinatesZero);
    }
    if zero_support.is_empty() {
        return Ok(true);
    }
    Ok(!cfg.excluded().covers(zero_support))
}

/// Whether the vanishing locus of the field inside `V` is nonempty.
///
/// The locus is `V` intersected with the subspace where every support
/// coordinate vanishes. Full support leaves no projective point at all,
/// so the locus is empty; otherwise the locus is nonempty exactly when
/// the subspace escapes the excluded union.
pub fn vanishing_nonempty(cfg: &LVMBConfig, field: &FundamentalField) -> Result<bool, ArrangementError> {
    let support = field.support();
    if support.is_empty() {
        return Err(ArrangementError::ZeroField);
    }
    check_range(cfg, &support)?;
    if support.len() == cfg.n() {
        return Ok(false);
    }
    Ok(!cfg.excluded().covers(&support))
}

fn check_range(cfg: &LVMBConfig, subset: &BTreeSet<usize>) -> Result<(), ArrangementError> {
    if let Some(&index) = subset.iter().find(|&&i| i == 0 || i > cfg.n()) {
        return Err(ArrangementError::IndexOutOfRange { index, n: cfg.n() });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn cfg_a() -> LVMBConfig {
        parse_config(
            r#"{"n":4,"m":1,
                "lambda":[[[[1,1],[0,1]],[[2,1],[0,1]],[[3,1],[0,1]],[[0,1],[0,1]]]],
                "excluded":[[4],[1,2,3]]}"#,
        )
        .unwrap()
    }

    fn set(indices: &[usize]) -> BTreeSet<usize> {
        indices.iter().copied().collect()
    }

    #[test]
    fn k_count_examples() {
        assert_eq!(k_count(&cfg_a()), 1);

        let three_singletons = parse_config(
            r#"{"n":4,"m":1,
                "lambda":[[[[1,1],[0,1]],[[2,1],[0,1]],[[3,1],[0,1]],[[0,1],[0,1]]]],
                "excluded":[[1],[2],[3]]}"#,
        )
        .unwrap();
        assert_eq!(k_count(&three_singletons), 3);

        let no_singletons = parse_config(
            r#"{"n":5,"m":1,
                "lambda":[[[[1,1],[0,1]],[[2,1],[0,1]],[[3,1],[0,1]],[[4,1],[0,1]],[[0,1],[0,1]]]],
                "excluded":[[1,2],[3,4]]}"#,
        )
        .unwrap();
        assert_eq!(k_count(&no_singletons), 0);
    }

    #[test]
    fn containment_examples() {
        let cfg = cfg_a();
        assert!(subspace_contained_in_e(&cfg, &set(&[4])).unwrap());
        assert!(!subspace_contained_in_e(&cfg, &set(&[1])).unwrap());
        assert!(subspace_contained_in_e(&cfg, &set(&[1, 2, 3])).unwrap());
        assert_eq!(
            subspace_contained_in_e(&cfg, &set(&[])).unwrap_err(),
            ArrangementError::EmptySubset
        );
    }

    #[test]
    fn point_membership_examples() {
        let cfg = cfg_a();
        assert!(point_in_v(&cfg, &set(&[])).unwrap());
        assert!(!point_in_v(&cfg, &set(&[4])).unwrap());
        assert!(point_in_v(&cfg, &set(&[2])).unwrap());
        assert_eq!(
            point_in_v(&cfg, &set(&[1, 2, 3, 4])).unwrap_err(),
            ArrangementError::AllCoordinatesZero
        );
    }

    #[test]
    fn vanishing_examples() {
        let cfg = cfg_a();
        let e = |i| FundamentalField::coordinate(4, i);
        assert!(vanishing_nonempty(&cfg, &e(1)).unwrap());
        assert!(!vanishing_nonempty(&cfg, &e(4)).unwrap());

        let mut alpha = vec![GaussianRational::from_int(0); 4];
        alpha[0] = GaussianRational::from_int(1);
        alpha[1] = GaussianRational::from_int(1);
        alpha[2] = GaussianRational::from_int(1);
        let combo = FundamentalField::new(alpha);
        assert!(!vanishing_nonempty(&cfg, &combo).unwrap());

        let zero = FundamentalField::new(vec![GaussianRational::from_int(0); 4]);
        assert_eq!(
            vanishing_nonempty(&cfg, &zero).unwrap_err(),
            ArrangementError::ZeroField
        );
    }

    #[test]
    fn full_support_field_never_vanishes_even_with_empty_excluded() {
        let cfg = parse_config(
            r#"{"n":4,"m":1,
                "lambda":[[[[1,1],[0,1]],[[2,1],[0,1]],[[3,1],[0,1]],[[0,1],[0,1]]]],
                "excluded":[]}"#,
        )
        .unwrap();
        let full = FundamentalField::new(vec![GaussianRational::from_int(2); 4]);
        assert!(!vanishing_nonempty(&cfg, &full).unwrap());
    }

    fn arb_config(n: usize) -> impl Strategy<Value = LVMBConfig> {
        proptest::collection::vec(
            proptest::collection::btree_set(1..=n, 1..=n),
            0..5,
        )
        .prop_map(move |gens| {
            let lambda = crate::linalg::ExactMatrix::from_rows(vec![(1..=n as i64)
                .map(GaussianRational::from_int)
                .collect()])
            .unwrap();
            let family = crate::config::SubspaceFamily::new(gens).unwrap();
            LVMBConfig::new(n, 1, lambda, family, None).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn containment_is_monotone(cfg in arb_config(7), s in proptest::collection::btree_set(1usize..=7, 1..=7)) {
            let bigger: BTreeSet<usize> = (1..=7).collect();
            if subspace_contained_in_e(&cfg, &s).unwrap() {
                prop_assert!(subspace_contained_in_e(&cfg, &bigger).unwrap());
                for extra in 1..=7usize {
                    let mut grown = s.clone();
                    grown.insert(extra);
                    prop_assert!(subspace_contained_in_e(&cfg, &grown).unwrap());
                }
            }
        }

        #[test]
        fn vanishing_depends_only_on_support(
            cfg in arb_config(7),
            s in proptest::collection::btree_set(1usize..=7, 1..=7),
            scale_num in 1i64..=5,
        ) {
            let mut small = vec![GaussianRational::from_int(0); 7];
            let mut scaled = vec![GaussianRational::from_int(0); 7];
            for &i in &s {
                small[i - 1] = GaussianRational::from_int(1);
                scaled[i - 1] = GaussianRational::new(rat(scale_num, 3), rat(-scale_num, 7));
            }
            prop_assert_eq!(
                vanishing_nonempty(&cfg, &FundamentalField::new(small)).unwrap(),
                vanishing_nonempty(&cfg, &FundamentalField::new(scaled)).unwrap()
            );
        }

        #[test]
        fn coordinate_field_vanishing_counts_match_k(cfg in arb_config(7)) {
            let non_vanishing = (1..=7usize)
                .filter(|&i| !vanishing_nonempty(&cfg, &FundamentalField::coordinate(7, i)).unwrap())
                .count();
            prop_assert_eq!(non_vanishing, k_count(&cfg));
        }
    }
}
