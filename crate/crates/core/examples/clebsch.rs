//! The Clebsch graph: the empty (0,3,6) row, the ten 4K2 sets and the forty C4s.

use intriguing::catalog::clebsch;
use intriguing::intrigue::{enumerate, EnumerateOptions, Sign};

fn main() -> intriguing::Result<()> {
    let g = clebsch();
    let neg = enumerate(&g, Some(Sign::Negative), &EnumerateOptions::default())?;
    for row in &neg.rows {
        let hits = neg.found.iter().filter(|f| f.set.len() == row.size).count();
        println!("row h1={} h2={} size={}: {hits} sets", row.h1, row.h2, row.size);
    }
    let opts = EnumerateOptions { size_cap: Some(4), ..Default::default() };
    let c4 = enumerate(&g, Some(Sign::Positive), &opts)?;
    println!("{} positive sets of size 4", c4.found.len());
    for f in c4.found.iter().take(5) {
        println!("  {:?}", f.set.indices());
    }
    Ok(())
}
