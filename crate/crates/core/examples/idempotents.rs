//! Minimal idempotents of the catalog graphs, and the annihilation test
//! that characterises intriguing sets.

use intriguing::catalog::{build_named, petersen, NamedGraphId};
use intriguing::exactmath::{Rational, RationalMatrix};
use intriguing::graphcore::minimal_idempotents;
use intriguing::intrigue::{enumerate, EnumerateOptions};

fn main() -> intriguing::Result<()> {
    for id in NamedGraphId::ALL {
        let g = build_named(id);
        match minimal_idempotents(&g) {
            Ok(e) => {
                let rank = (0..g.n()).fold(Rational::zero(), |acc, i| acc + e.e1.get(i, i));
                println!("{}: {:?}, multiplicity of e+ is {rank}", g.label(), e.params);
            }
            Err(err) => println!("{}: {err}", g.label()),
        }
    }
    let g = petersen();
    let e = minimal_idempotents(&g)?;
    for f in enumerate(&g, None, &EnumerateOptions::default())?.found.iter().take(4) {
        let chi = RationalMatrix::from_integer_fn(g.n(), 1, |i, _| i64::from(f.set.contains(i)));
        println!(
            "{} {:?}: E1 chi = 0 is {}, E2 chi = 0 is {}",
            f.certificate,
            f.set.indices(),
            e.e1.mul(&chi)?.is_zero(),
            e.e2.mul(&chi)?.is_zero()
        );
    }
    Ok(())
}
