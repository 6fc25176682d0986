use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use intriguing::catalog::{build_named, clebsch, petersen, NamedGraphId};
use intriguing::exactmath::{Rational, RationalMatrix};
use intriguing::graphcore::{minimal_idempotents, srg_params, Graph, VertexSet};
use intriguing::intrigue::{complement, enumerate, verify, EnumerateOptions, Sign, Verifier};

/// n(e+ - e-) E as an integer matrix.
fn scaled(e: &RationalMatrix, d: i64) -> Vec<Vec<i64>> {
    let d = Rational::from(d);
    (0..e.rows())
        .map(|i| {
            (0..e.cols())
                .map(|j| {
                    let x = e.get(i, j) * d.clone();
                    x.to_i64().expect("denominators cleared")
                })
                .collect()
        })
        .collect()
}

fn kills(m: &[Vec<i64>], s: &VertexSet) -> bool {
    m.iter().all(|row| s.indices().iter().map(|&j| row[j]).sum::<i64>() == 0)
}

fn catalog() -> Vec<Graph> {
    NamedGraphId::ALL.into_iter().filter(|&id| id != NamedGraphId::Pentagon).map(build_named).collect()
}

#[test]
fn annihilation_matches_the_degree_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for g in catalog() {
        let id = minimal_idempotents(&g).unwrap();
        let (ep, em) = id.params.eigenvalues().unwrap();
        let d = g.n() as i64 * (ep - em);
        let (e1, e2) = (scaled(&id.e1, d), scaled(&id.e2, d));
        let mut samples: Vec<VertexSet> = (0..1000)
            .map(|_| {
                let p: f64 = rng.gen_range(0.05..0.95);
                g.vertex_set((0..g.n()).filter(|_| rng.gen_bool(p)))
            })
            .filter(|s| !s.is_empty() && s.len() < g.n())
            .collect();
        for (sign, cap) in [(Sign::Positive, 10), (Sign::Negative, 22)] {
            let opts = EnumerateOptions { size_cap: Some(cap), ..Default::default() };
            samples.extend(enumerate(&g, Some(sign), &opts).unwrap().found.into_iter().map(|f| f.set));
        }
        let mut hits = 0;
        for s in &samples {
            let cert = verify(&g, s).unwrap();
            let (pos, neg) = (kills(&e2, s), kills(&e1, s));
            assert_eq!(cert.map(|c| c.sign == Sign::Positive), pos.then_some(true).or(neg.then_some(false)), "{}", g.label());
            hits += usize::from(cert.is_some());
        }
        assert!(hits > 0, "{}", g.label());
    }
}

fn subset(n: usize) -> impl Strategy<Value = Vec<bool>> {
    proptest::collection::vec(any::<bool>(), n)
}

proptest! {
    #[test]
    fn certificates_obey_the_size_formula(bits in subset(16)) {
        let g = clebsch();
        let p = srg_params(&g).unwrap();
        let s = g.vertex_set((0..16).filter(|&i| bits[i]));
        prop_assume!(!s.is_empty() && s.len() < 16);
        if let Some(c) = verify(&g, &s).unwrap() {
            prop_assert_eq!(c.size * (p.k as usize - c.h1 + c.h2), c.h2 * p.v as usize);
            prop_assert_eq!(c.size, s.len());
        }
    }

    #[test]
    fn complement_is_an_involution(pick in 0usize..22) {
        let g = petersen();
        let v = Verifier::new(&g).unwrap();
        let found = enumerate(&g, None, &EnumerateOptions::default()).unwrap().found;
        let f = &found[pick % found.len()];
        let once = complement(&v, &f.set).unwrap();
        prop_assert_eq!(once.certificate.sign, f.certificate.sign);
        prop_assert_eq!(complement(&v, &once.set).unwrap().set, f.set.clone());
    }

    #[test]
    fn non_regular_sets_get_no_certificate(bits in subset(10)) {
        let g = petersen();
        let s = g.vertex_set((0..10).filter(|&i| bits[i]));
        prop_assume!(!s.is_empty() && s.len() < 10);
        let inside: Vec<usize> = s.indices().iter().map(|&x| g.neighbors(x).intersection_len(s.bits())).collect();
        let outside: Vec<usize> = s.complement().indices().iter().map(|&x| g.neighbors(x).intersection_len(s.bits())).collect();
        let regular = inside.windows(2).all(|w| w[0] == w[1]) && outside.windows(2).all(|w| w[0] == w[1]);
        prop_assert_eq!(verify(&g, &s).unwrap().is_some(), regular);
    }
}
