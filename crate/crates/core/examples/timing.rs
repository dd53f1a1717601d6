use tkk_core::roots::{Family, chevalley::chevalley_of};
use std::time::Instant;

fn main() {
    for (fam, rank) in [(Family::E, 7), (Family::E, 8)] {
        let (_, g, _) = chevalley_of(fam, rank).unwrap();
        let t = Instant::now();
        let jac = g.jacobi_exhaustive();
        println!("{fam}{rank}: dim={} exhaustive_jacobi={jac:?} ({:?})", g.dim(), t.elapsed());
    }
}
