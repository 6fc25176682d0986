//! Hemisystem of Q-(5,3): its partial quadrangle, its behaviour at every
//! point, and its recovery from a single minus-perp trace.

use intriguing::geometry::{collinearity_graph, elliptic_gq, find_hemisystem, minus_perp, restrict_to_set};
use intriguing::graphcore::srg_params;
use intriguing::infinity::{complete_to_hemisystem, nice_hemi_evidence};

fn main() -> intriguing::Result<()> {
    let geo = elliptic_gq(3)?.into_geometry();
    let h = find_hemisystem(&geo)?;
    let pq = restrict_to_set(&geo, &h)?;
    println!("PQ on H: {:?}", srg_params(&collinearity_graph(&pq.geometry))?);
    let ev = nice_hemi_evidence(&geo, &h)?;
    println!("{}: {} points recorded", ev.title, ev.records.len());
    for r in ev.records.iter().take(2) {
        println!("{r:?}");
    }
    for p in [h.indices()[0], h.complement().indices()[0]] {
        let mp = minus_perp(&geo, p)?;
        let trace = mp.restrict(&h);
        let done = complete_to_hemisystem(&geo, p, &mp, &trace)?;
        println!("P={p}: trace {} points, added {}, recovered H: {}", trace.len(), done.added.len(), done.hemisystem == h);
    }
    Ok(())
}
