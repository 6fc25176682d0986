//! Builds the elliptic quadrangle Q-(5,3) and certifies its classical
//! tight sets and a hemisystem.

use intriguing::geometry::{classify_point_set, collinearity_graph, elliptic_gq, find_hemisystem};
use intriguing::graphcore::srg_params;
use intriguing::intrigue::verify;

fn main() -> intriguing::Result<()> {
    let gq = elliptic_gq(3)?;
    let geo = gq.geometry();
    geo.verify()?;
    println!("{} points, {} lines, order {:?}", geo.point_count(), geo.lines().len(), geo.order());
    let g = collinearity_graph(geo);
    println!("{:?}", srg_params(&g)?);
    let line = geo.vertex_set(geo.line(0).iter().copied());
    let parabolic = geo.vertex_set(gq.parabolic_section()?);
    let hyperbolic = geo.vertex_set(gq.hyperbolic_section()?);
    let h = find_hemisystem(geo)?;
    for (name, set) in [("line", &line), ("Q(4,3)", &parabolic), ("Q+(3,3)", &hyperbolic), ("hemisystem", &h)] {
        let cert = verify(&g, set)?.expect("intriguing");
        println!("{name}: size {} {cert} {:?}", set.len(), classify_point_set(geo, set)?);
    }
    Ok(())
}
