use einf_core::operad::partition_boundary_homology;
use einf_core::linalg::Coeff;
use std::time::Instant;

fn main() {
    for n in [5usize, 6] {
        let t = Instant::now();
        let h = partition_boundary_homology(n, Coeff::Z).unwrap();
        println!("n={n}: {:?} in {:?}", h.iter().filter(|(_,g)| !g.is_zero()).collect::<Vec<_>>(), t.elapsed());
    }
    let t = Instant::now();
    let s = einf_core::sigma::superlie(5).unwrap();
    println!("superlie(5): rank {} in {:?}", s.rank, t.elapsed());
    let r = s.restrict().unwrap();
    println!("restriction char: {:?} in {:?}", r.character(), t.elapsed());
    let t = Instant::now();
    let s = einf_core::sigma::superlie(6).unwrap();
    println!("superlie(6): rank {} in {:?}", s.rank, t.elapsed());
    let r = s.restrict().unwrap();
    println!("restriction char: {:?} in {:?}", r.character(), t.elapsed());
}
