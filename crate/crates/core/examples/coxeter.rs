//! Searches PG(4,3) for the 11-cap, builds its linear representation and
//! certifies hyperplane and secundum sets. Takes about half a minute in
//! release mode.

use std::collections::BTreeMap;

use intriguing::geometry::{
    cap_search, hyperplane_affine_set, hyperplane_from_equation, linear_representation, secundum_affine_set,
    ProjectiveSpace,
};
use intriguing::intrigue::verify;

fn main() -> intriguing::Result<()> {
    let cap = cap_search(4, 3, 11, true, None)?;
    let rep = linear_representation(&cap);
    println!("{:?}", rep.srg);
    let mut seen = BTreeMap::new();
    for a in ProjectiveSpace::new(5, 3)?.points() {
        if a.coords[1..].iter().all(|&x| x == 0) {
            continue;
        }
        let h = hyperplane_affine_set(&rep, &hyperplane_from_equation(&rep.field, &a.coords)?)?;
        let cert = verify(&rep.graph, &h.set)?.expect("hyperplane set");
        *seen.entry(cert.to_string()).or_insert(0) += 1;
    }
    println!("hyperplanes: {seen:?}");
    let inf = rep.cap_at_infinity();
    for i in 0..inf.len() {
        for j in i + 1..inf.len() {
            for k in j + 1..inf.len() {
                let basis = vec![vec![1, 0, 0, 0, 0, 0], inf[i].clone(), inf[j].clone(), inf[k].clone()];
                if let Ok(s) = secundum_affine_set(&rep, &basis) {
                    println!("secundum: size {} {}", s.set.len(), verify(&rep.graph, &s.set)?.expect("secundum"));
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}
