#![no_main]

use libfuzzer_sys::fuzz_target;
use quasimap_sl2::gring::BiLaurentPoly;

fuzz_target!(|text: &str| {
    if let Ok(p) = text.parse::<BiLaurentPoly>() {
        let back: BiLaurentPoly = p.to_string().parse().expect("rendered polynomial parses");
        assert_eq!(back, p);
    }
});
