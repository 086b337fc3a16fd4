#![no_main]

use libfuzzer_sys::fuzz_target;
use quasimap_sl2::gring::BiDegree;
use quasimap_sl2::mpoly::{Generator, GeneratorTable, Poly};

fuzz_target!(|text: &str| {
    let table = GeneratorTable::new(vec![
        Generator::even("x", BiDegree::new(2, 0)),
        Generator::odd("w1", BiDegree::new(-2, 2)),
        Generator::odd("w2", BiDegree::new(-4, 2)),
    ])
    .unwrap();
    if let Ok(p) = Poly::parse(&table, text) {
        assert_eq!(Poly::parse(&table, &p.to_string()).unwrap(), p);
        let w1 = Poly::gen(&table, "w1").unwrap();
        assert!((&(&p * &w1) * &w1).is_zero());
    }
});
