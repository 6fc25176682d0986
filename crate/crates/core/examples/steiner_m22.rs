//! The Steiner system S(3,6,22) from hyperovals of PG(2,4) and the M22 graph
//! on its blocks.

use intriguing::catalog::{is_steiner_3_system, m22, steiner_3_6_22};
use intriguing::graphcore::srg_params;

fn main() -> intriguing::Result<()> {
    let blocks = steiner_3_6_22();
    println!("{} blocks, Steiner 3-design: {}", blocks.len(), is_steiner_3_system(22, &blocks));
    println!("{:?}", srg_params(&m22())?);
    Ok(())
}
