//! Classifies every negative intriguing set of the minus-perp quadrangle of
//! Q-(5,2) and prints the evidence report.

use intriguing::geometry::{collinearity_graph, elliptic_gq, minus_perp};
use intriguing::infinity::negint_minusperp_evidence;
use intriguing::intrigue::{enumerate, EnumerateOptions, Sign};

fn main() -> intriguing::Result<()> {
    let geo = elliptic_gq(2)?.into_geometry();
    let mp = minus_perp(&geo, 0)?;
    let found = enumerate(&collinearity_graph(&mp.geometry), Some(Sign::Negative), &EnumerateOptions::default())?;
    let sets: Vec<_> = found.found.into_iter().map(|f| f.set).collect();
    print!("{}", negint_minusperp_evidence(&geo, 0, &sets)?);
    Ok(())
}
