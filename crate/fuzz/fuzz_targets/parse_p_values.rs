#![no_main]

use libfuzzer_sys::fuzz_target;

// Every exponent the list parser accepts is either an infinity marker or a
// finite float (never NaN), and survives a display/reparse cycle intact.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(ps) = pdense::metrics::parse_p_list(text) else {
        return;
    };
    for p in ps {
        if let pdense::PValue::Finite(v) = p {
            assert!(v.is_finite());
        }
        let round: pdense::PValue = p.to_string().parse().expect("display reparses");
        assert_eq!(round, p);
    }
});
