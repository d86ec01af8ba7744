#![no_main]

use libfuzzer_sys::fuzz_target;
use spanforge::trust::{parse_trust_list, trust_value, TrustPath};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(values) = parse_trust_list(text) else {
        return;
    };
    let path = TrustPath::new(values, 4.0).unwrap();
    let v = trust_value(&path);
    assert!((0.0..=4.0).contains(&v));
});
