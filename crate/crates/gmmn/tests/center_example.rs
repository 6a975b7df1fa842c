mod common;

use common::reference_matrix;
use gmmn::center::{center_modular, match_up_to_permutation};

#[test]
fn sl3_level3_matches_reference_matrix() {
    let d = center_modular(3, 3).unwrap();
    let reference = reference_matrix();
    let p = match_up_to_permutation(&d.s, &reference).expect("no simultaneous permutation");
    // the three split copies sit at the end in both orders
    let mut tail: Vec<usize> = p[11..].to_vec();
    tail.sort();
    assert_eq!(tail, vec![11, 12, 13]);
}
