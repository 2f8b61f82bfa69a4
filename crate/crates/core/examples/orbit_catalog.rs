//! The ten orbits of GL₂×GL₂×GLₙ and their Hasse diagram.

use hypermat::orbits::{hasse_dot, orbit_catalog};

fn main() {
    let n = 4;
    for e in orbit_catalog(n).unwrap() {
        println!(
            "{}  dim {:>2}  codim {:>2}  {}",
            e.label, e.dim, e.codim, e.representative
        );
    }
    print!("{}", hasse_dot(n).unwrap());
}
