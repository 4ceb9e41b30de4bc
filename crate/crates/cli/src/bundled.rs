//! The example corpus shipped in `corpus/`, and the code that produces it.

use yblie_core::constructions::hom_deform;
use yblie_core::context::{GradedObject, MonoidalContext};
use yblie_core::rational::{rat, ratio};
use yblie_core::transport::{
    inconsistent_functor, make_forgetful_functor, make_hom_iso_functor, make_identity_functor,
};
use yblie_core::{corpus, YBLieAlgebra};

use crate::convert::{
    assoc_entries, bialgebra_entries, coalgebra_entries, functor_entry, lie_entries, operator_entry,
};
use crate::manifest::{Entry, Manifest};

macro_rules! bundled {
    ($($file:literal),* $(,)?) => {
        pub const FILES: &[(&str, &str)] = &[
            $(($file, include_str!(concat!("../corpus/", $file)))),*
        ];
    };
}

bundled!(
    "sl2.json",
    "sl2-broken.json",
    "heisenberg.json",
    "gl11.json",
    "gl11-plain.json",
    "mat2.json",
    "exterior.json",
    "truncpoly.json",
    "group-z2.json",
    "sl2-hom.json",
    "functors.json",
    "yb-scaled.json",
    "hom-nonauto.json",
    "functor-inconsistent.json",
);

fn expect(mut entries: Vec<Entry>, name: &str, failures: &[&str]) -> Vec<Entry> {
    for e in entries.iter_mut().filter(|e| e.name == name) {
        e.expect_failures = failures.iter().map(|s| s.to_string()).collect();
    }
    entries
}

/// `gl(1|1)` with its grading forgotten: the signed flip as an operator on
/// a plain space.
pub fn gl11_plain() -> YBLieAlgebra {
    let gl11 = corpus::gl11();
    let op = gl11
        .op()
        .rehome(GradedObject::plain(4), MonoidalContext::Strict)
        .expect("same dimension");
    YBLieAlgebra::new(op, gl11.bracket().clone()).expect("shapes")
}

/// Every corpus file, regenerated from the library's example structures.
pub fn generate() -> Vec<(&'static str, Manifest)> {
    let sl2 = corpus::sl2();
    let gl11 = corpus::gl11();
    let mut sl2_file = lie_entries("sl2", &sl2);
    sl2_file.extend(coalgebra_entries("sl2.dual", &sl2.dualize().expect("dualizable")));

    let mut sl2_hom = Vec::new();
    for (label, q) in [("2", rat(2)), ("3", rat(3)), ("1/2", ratio(1, 2))] {
        let name = format!("sl2.hom[q={label}]");
        let alg = hom_deform(&sl2, &corpus::sl2_alpha(q)).expect("automorphism");
        sl2_hom.extend(lie_entries(&name, &alg));
    }

    let mut functors = lie_entries("sl2", &sl2);
    functors.extend(lie_entries("gl11", &gl11));
    functors.push(functor_entry("identity[sl2]", &make_identity_functor(&sl2), Some("sl2")));
    for (label, q) in [("2", rat(2)), ("3", rat(3)), ("1/2", ratio(1, 2))] {
        let f = make_hom_iso_functor(&sl2, &corpus::sl2_alpha(q)).expect("automorphism");
        functors.push(functor_entry(&format!("hom-iso[sl2, q={label}]"), &f, Some("sl2")));
    }
    let forget = make_forgetful_functor(&gl11).expect("undeformed source");
    functors.push(functor_entry("forgetful[gl11]", &forget, Some("gl11")));

    vec![
        ("sl2.json", sl2_file),
        (
            "sl2-broken.json",
            expect(
                lie_entries("sl2-broken", &corpus::sl2_broken()),
                "sl2-broken",
                &["jacobi_right"],
            ),
        ),
        ("heisenberg.json", lie_entries("heisenberg", &corpus::heisenberg())),
        ("gl11.json", lie_entries("gl11", &gl11)),
        ("gl11-plain.json", lie_entries("gl11-plain", &gl11_plain())),
        ("mat2.json", assoc_entries("mat2", &corpus::mat2())),
        ("exterior.json", bialgebra_entries("exterior", &corpus::exterior())),
        ("truncpoly.json", bialgebra_entries("truncpoly", &corpus::truncpoly())),
        ("group-z2.json", bialgebra_entries("group-z2", &corpus::group_algebra_z2())),
        ("sl2-hom.json", sl2_hom),
        ("functors.json", functors),
        (
            "yb-scaled.json",
            vec![{
                let mut e = operator_entry("yb-scaled", &corpus::scaled_yb());
                e.expect_failures = vec!["self_inverse".into()];
                e
            }],
        ),
        (
            "hom-nonauto.json",
            expect(
                lie_entries("sl2.hom-nonauto", &corpus::sl2_hom_nonauto()),
                "sl2.hom-nonauto",
                &["hom_equivariant"],
            ),
        ),
        (
            "functor-inconsistent.json",
            vec![{
                let mut e = functor_entry("inconsistent", &inconsistent_functor(), None);
                e.expect_failures = vec!["lambda_prime".into()];
                e
            }],
        ),
    ]
    .into_iter()
    .map(|(f, entries)| (f, Manifest::new(entries)))
    .collect()
}
