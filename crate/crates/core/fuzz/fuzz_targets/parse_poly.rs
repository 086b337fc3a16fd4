#![no_main]

use libfuzzer_sys::fuzz_target;
use quasimap_sl2::gring::BiDegree;
use quasimap_sl2::mpoly::{even_table, Poly};

fuzz_target!(|text: &str| {
    let table =
        even_table([("x1", BiDegree::new(2, 0)), ("x2", BiDegree::new(2, 0)), ("c", BiDegree::new(4, -2))]).unwrap();
    if let Ok(p) = Poly::parse(&table, text) {
        assert_eq!(Poly::parse(&table, &p.to_string()).unwrap(), p);
        let _ = p.bidegree();
    }
});
