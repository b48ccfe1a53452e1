use crystal_core::{Crystal, CrystalElement, CrystalOps, RootDatum};
use crystal_tools::commands::highest;
use crystal_tools::format::element_from_json;
use proptest::prelude::*;

fn walk(c: &CrystalOps, start: CrystalElement, steps: &[(usize, bool)]) -> CrystalElement {
    let mut x = start;
    for &(k, up) in steps {
        let k = k % c.rank();
        if let Some(y) = if up { c.e(&x, k) } else { c.f(&x, k) } {
            x = y;
        }
    }
    x
}

proptest! {
    #[test]
    fn canonical_json_round_trips(
        lambda in proptest::collection::vec(0i64..=2, 3),
        mu in proptest::collection::vec(0i64..=2, 3),
        steps in proptest::collection::vec((0usize..3, any::<bool>()), 0..30),
    ) {
        let c = CrystalOps::new(RootDatum::preset("A3").unwrap());
        let x = walk(&c, CrystalElement::tensor([highest(&lambda), highest(&mu)]), &steps);
        let text = x.canonical();
        let back = element_from_json(&text, 3).unwrap();
        prop_assert_eq!(back.canonical(), text);
        prop_assert_eq!(back, x);
    }
}
