//! Every constructor over its full parameter grid, plus the Padé cross-check
//! for the double brushes.

mod common;

use dzpairs::seriesgen::*;
use rayon::prelude::*;

#[test]
fn every_grid_point_is_a_minimal_pair() {
    let failures: Vec<String> = common::grid()
        .par_iter()
        .filter_map(|p| match construct(p).and_then(|d| d.report()) {
            Ok(rep) if rep.passes() && rep.minimal => None,
            Ok(rep) => Some(format!("{p}: {:?}", rep.messages)),
            Err(e) => Some(format!("{p}: {e}")),
        })
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn double_brushes_are_pade_forms() {
    let grid = common::e_grid();
    assert!(grid.len() > 300);
    let bad: Vec<String> = grid
        .par_iter()
        .filter(|p| !common::e_point_is_pade(p))
        .map(|p| p.to_string())
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn printed_asymmetric_split_form_is_reported() {
    for k in 3..=8 {
        let e = split_orbit_belyi(k, SplitVariant::Asymmetric).unwrap_err();
        assert!(matches!(e, dzpairs::DzError::Erratum(_)), "{e}");
    }
}
