//! Digests of every transcribed polynomial; editing a coefficient breaks this.

use sha2::{Digest, Sha256};

const PINNED: [(&str, &str); 13] = [
    ("F", "6ce8748dd9c8a1b2e07f999e4d505586ac6b9cc4438a4b1d7610c31fd4d0d187"),
    ("W_bracket", "b0c77714fcbc7363d3067b3097e94dff7c721b7713d53b4e028186c0c9ebe469"),
    ("S1_branches", "d0036e6c939ed85aa9b87db1413887d3668f8fcebf5c4ee98728d3506162df71"),
    ("cusp.p", "542bba0afe57d10ff84aed7262766c440c140b96d66c9e6da4aca62ead5f8f28"),
    ("cusp.q", "9674fe8fa34a1eae808d38ca7237018779182226a58dd8cc034b4b53a1297099"),
    ("cusp.r", "401e6a3f71c6cb8583d1620df8d1cb899a7a19ee73d9d5c5c30f9c267997e815"),
    ("cusp.E", "f703e35ab59c168ec68977bcb12e2db972581aceae001010dcad17c691a80289"),
    ("cusp.G", "151b3dc25b9f9ee5ab4e0712b53d213569e35d9ee2fab39dd8c54037384c4bd1"),
    ("cusp.R", "f319226133b765fbd559673fc4a1c01e46b9d21b4cd4697d19cde17c8947b0c6"),
    ("cusp.S", "fe31122728c02508d521322ccfe8ee20d526039191ad15d6b119332f8ebaafdf"),
    ("cusp.T", "fd6657b46ca22fea20fd904e97a7f13cce54b0b904969c598536401189280788"),
    ("cusp.U", "8f79c7f867bc1eff1ba8745fb7f5c52c32220968ddcfb884889301d614967055"),
    ("example5.f", "9ac05a9f145e4a4f8dbf5740cf237ef5806a6f6bee1c61622e6be98aa3a5ce6c"),
];

#[test]
fn transcriptions_are_pinned() {
    let forms = g25::paperlab::canonical_forms();
    assert_eq!(forms.len(), PINNED.len());
    for ((name, form), (pn, digest)) in forms.iter().zip(PINNED) {
        assert_eq!(*name, pn);
        assert_eq!(hex::encode(Sha256::digest(form.as_bytes())), digest, "{name} changed");
    }
}
