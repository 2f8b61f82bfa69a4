//! Decompose S_γ(A⊗B) for two-dimensional A and B, and read off
//! multiplicities in the localization at the degree-6 semi-invariant.

use hypermat::schur::{localization_multiplicity, plethysm_2x2, semi_invariant_weight};
use hypermat::weights::{TripleWeight, Weight};

fn main() {
    let gamma = Weight::from([3, 1, 0, 0]);
    for ((a, b), m) in plethysm_2x2(&gamma).unwrap().terms {
        println!("S_{gamma}(A⊗B) ⊇ {m} × S_{a}A ⊗ S_{b}B");
    }
    let sigma = semi_invariant_weight();
    for t in [
        TripleWeight::new([-1, -3], [-1, -3], [-1, -1, -2]),
        TripleWeight::new([-2, -2], [-2, -2], [-1, -1, -2]),
    ] {
        println!(
            "[S_f : {t}] = {}",
            localization_multiplicity(&t, &sigma).unwrap()
        );
    }
}
