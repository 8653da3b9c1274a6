//! The twelve acceptance criteria, one test each.

use minkowski_sine::reproduce::{self, Outcome};

fn check(o: Outcome) {
    println!("{o}");
    assert!(o.passed, "{o}");
}

#[test]
fn c01_euclidean_consistency() {
    check(reproduce::euclidean_consistency());
}

#[test]
fn c02_oracle_equivalence() {
    check(reproduce::oracle_equivalence());
}

#[test]
fn c03_range_and_degeneracy() {
    check(reproduce::range_degeneracy());
}

#[test]
fn c04_radon_symmetry_dichotomy() {
    check(reproduce::radon_symmetry());
}

#[test]
fn c05_rectilinear_table() {
    check(reproduce::rectilinear_table());
}

#[test]
fn c06_c_e_extremes() {
    check(reproduce::c_e_extremes());
}

#[test]
fn c07_conjugate_range_bounds() {
    check(reproduce::conjugate_range_bounds());
}

#[test]
fn c08_law_of_sines() {
    check(reproduce::law_of_sines_check());
}

#[test]
fn c09_bisector_coincidence() {
    check(reproduce::bisector_coincidence());
}

#[test]
fn c10_equivalence_suites() {
    check(reproduce::equivalence_suites());
}

#[test]
fn c11_benitez_alpha() {
    check(reproduce::benitez_alpha_check());
}

#[test]
fn c12_d_constant() {
    check(reproduce::d_constant_check());
}
