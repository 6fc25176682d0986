//! Every intriguing set of the Petersen graph, grouped into orbits under S5.

use intriguing::catalog::{petersen, petersen_automorphisms};
use intriguing::intrigue::{enumerate, feasible_params, EnumerateOptions};
use intriguing::graphcore::srg_params;

fn main() -> intriguing::Result<()> {
    let g = petersen();
    let params = srg_params(&g)?;
    println!("{params:?}, eigenvalues {:?}", params.eigenvalues()?);
    for row in feasible_params(&params)? {
        println!("feasible {} h1={} h2={} size={}", row.sign, row.h1, row.h2, row.size);
    }
    let opts = EnumerateOptions { group: Some(petersen_automorphisms()), ..Default::default() };
    let all = enumerate(&g, None, &opts)?;
    for f in &all.found {
        println!("{} {:?} orbit={:?}", f.certificate, f.set.indices(), f.orbit_size);
    }
    println!("{} sets, exhaustive={}, nodes={}", all.found.len(), all.exhaustive, all.nodes);
    Ok(())
}
