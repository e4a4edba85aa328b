//! Fuzzes the polynomial text parser: it must never panic, and any
//! successfully parsed polynomial must survive a print/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use vandermonde::poly::Polynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    for n_vars in [1usize, 3, 7] {
        if let Ok(poly) = Polynomial::parse(text, n_vars) {
            let printed = poly.to_string();
            let reparsed = Polynomial::parse(&printed, n_vars)
                .expect("printed polynomial must reparse");
            assert_eq!(reparsed, poly, "print/parse round trip changed the polynomial");
        }
    }
});
