//! The partial quadrangle left after deleting P-perp from Q-(5,3), with its
//! cones, cone unions and grids.

use intriguing::geometry::{collinearity_graph, cone, elliptic_gq, grid, minus_perp};
use intriguing::graphcore::srg_params;
use intriguing::intrigue::{complement, union, Verifier};

fn main() -> intriguing::Result<()> {
    let gq = elliptic_gq(3)?;
    let geo = gq.geometry();
    let p = 0;
    let mp = minus_perp(geo, p)?;
    let pq = collinearity_graph(&mp.geometry);
    println!("{:?}", srg_params(&pq)?);
    let v = Verifier::new(&pq)?;
    let cones: Vec<_> = geo.neighbours(p).iter().map(|z| cone(geo, &mp, p, z)).collect::<Result<_, _>>()?;
    println!("cone: {}", v.verify(&cones[0])?.expect("cone"));
    println!("its complement: {}", complement(&v, &cones[0])?.certificate);
    let partner = cones.iter().find(|c| c.intersection_len(&cones[0]) == 0).expect("disjoint cone");
    println!("disjoint union: {}", union(&v, &cones[0], partner)?.certificate);
    let lines = geo.lines_on(p);
    let x = (0..geo.point_count()).find(|&x| x != p && !geo.collinear(p, x)).expect("opposite point");
    let gr = grid(&gq, &mp, p, lines[0], lines[1], x)?;
    println!("grid: size {} {}", gr.set.len(), v.verify(&gr.set)?.expect("grid"));
    Ok(())
}
