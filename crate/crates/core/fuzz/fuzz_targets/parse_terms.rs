#![no_main]

use libfuzzer_sys::fuzz_target;
use quasimap_sl2::text::parse_terms;

fuzz_target!(|text: &str| {
    std::hint::black_box(parse_terms(text)).ok();
});
