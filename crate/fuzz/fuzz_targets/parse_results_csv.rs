#![no_main]

use libfuzzer_sys::fuzz_target;
use spanforge::io::{read_results, write_results};

fuzz_target!(|data: &[u8]| {
    let Ok(records) = read_results(data) else {
        return;
    };
    let mut out = Vec::new();
    write_results(&records, &mut out).unwrap();
    let back = read_results(out.as_slice()).expect("written results parse");
    // NaN weights are the only values that do not compare equal to themselves
    if records.iter().all(|r| !r.total_weight.is_nan()) {
        assert_eq!(back, records);
    }
});
