//! The block decomposition around P-perp and the resolvent identities for
//! negative sets of the minus-perp quadrangle.

use intriguing::geometry::{cone, elliptic_gq, find_hemisystem, minus_perp};
use intriguing::infinity::icky_identities;

fn main() -> intriguing::Result<()> {
    for q in [2, 3] {
        let geo = elliptic_gq(q)?.into_geometry();
        let p = 0;
        let mp = minus_perp(&geo, p)?;
        let mut sets: Vec<_> = geo.neighbours(p).iter().map(|z| cone(&geo, &mp, p, z)).collect::<Result<_, _>>()?;
        if q == 3 {
            sets.push(mp.restrict(&find_hemisystem(&geo)?));
        }
        let r = icky_identities(&geo, p, &sets)?;
        println!(
            "q={q}: closed-form inverse {}, row sums {}, CC^T {}, {} sets checked",
            r.inverse_closed_form, r.row_sums, r.cct_structure, r.sets_checked
        );
    }
    Ok(())
}
