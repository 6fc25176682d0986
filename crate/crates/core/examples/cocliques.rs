//! Maximum cocliques of Hoffman-Singleton and Gewirtz as negative intriguing
//! sets, plus the Petersen subgraphs of Hoffman-Singleton.

use intriguing::catalog::{gewirtz, hoffman_singleton};
use intriguing::intrigue::{enumerate, EnumerateOptions, Sign};

fn main() -> intriguing::Result<()> {
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get());
    let opts = |cap| EnumerateOptions { size_cap: Some(cap), threads, ..Default::default() };
    let hs = hoffman_singleton();
    let e = enumerate(&hs, Some(Sign::Negative), &opts(15))?;
    println!("Hoffman-Singleton: {} negative sets of size <= 15", e.found.len());
    let e = enumerate(&hs, Some(Sign::Positive), &opts(10))?;
    println!("Hoffman-Singleton: {} positive sets of size <= 10", e.found.len());
    let g = gewirtz();
    let e = enumerate(&g, Some(Sign::Negative), &opts(16))?;
    println!("Gewirtz: {} negative sets of size <= 16 in {} nodes", e.found.len(), e.nodes);
    Ok(())
}
