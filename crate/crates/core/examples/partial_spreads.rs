//! Seeded scan over random partial spreads of Q-(5,3) against a hemisystem.

use intriguing::geometry::{elliptic_gq, find_hemisystem};
use intriguing::infinity::scan_partial_spreads;

fn main() -> intriguing::Result<()> {
    let geo = elliptic_gq(3)?.into_geometry();
    let h = find_hemisystem(&geo)?;
    let scan = scan_partial_spreads(&geo, &h, 1, 200, 8)?;
    println!("{} spreads tried, {} degenerate, {} passing", scan.tried, scan.degenerate, scan.passing.len());
    for (lines, v) in scan.passing.iter().take(5) {
        println!("{lines:?}: {:?} predicted {:?}", v.restricted, v.predicted);
    }
    Ok(())
}
