#include <filesystem>
#include <fstream>
#include <iostream>

#include "csdjwt/bench.hpp"

// Regenerates the golden wire fixtures under tests/golden/. Run after any
// intentional token format change and commit the results.

using namespace csdjwt;

namespace {

void write(const std::filesystem::path& dir, const std::string& stem,
           const std::string& token, const Json& expected) {
    std::ofstream tf(dir / (stem + ".token"));
    tf << token << "\n";
    std::ofstream ef(dir / (stem + ".expected.json"));
    ef << expected.dump(1) << "\n";
    std::cout << "wrote " << stem << " (" << token.size() << " bytes)\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "tests/golden";
    std::filesystem::create_directories(dir);

    auto actors = bench::make_actors(0x601d);
    auto claims = bench::synthetic_claims(3);
    PresentationRequest req;
    req.nonce = Drbg(0xf1f1).bytes(16);
    req.audience = "vrf-1";

    IssueOptions copt;
    copt.issued_at = 1754006400;
    copt.rng = RandomSource(0xc001);
    auto vc = issue_credential(actors.issuer, actors.holder.did, claims, copt);
    auto vc_token = wire::encode_credential(vc);
    write(dir, "csd_credential", vc_token,
          Json{{"kind", "csd_credential"},
               {"issuer", vc.payload.issuer_did},
               {"holder", vc.payload.holder_did},
               {"acc",
                base64url_encode(vc.payload.accumulator_value.to_bytes())},
               {"entries", vc.wvc.entries.size()},
               {"reencoded", vc_token}});

    auto vp = generate_presentation(vc, {"claim_key_2"}, req, actors.holder);
    auto vp_token = wire::encode_presentation(vp);
    write(dir, "csd_presentation", vp_token,
          Json{{"kind", "csd_presentation"},
               {"disclosed", vp.disclosed.size()},
               {"nonce", base64url_encode(vp.nonce)},
               {"reencoded", vp_token}});

    sd::SdIssueOptions sopt;
    sopt.issued_at = 1754006400;
    sopt.decoy_count = 2;
    sopt.rng = RandomSource(0x5d5d);
    auto sc = sd::sd_issue(actors.issuer, actors.holder.did,
                           actors.holder.signing_key.public_key(), claims,
                           sopt);
    auto sc_token = wire::encode_credential(sc);
    write(dir, "sd_credential", sc_token,
          Json{{"kind", "sd_credential"},
               {"digests", sc.digests.size()},
               {"svc", sc.svc.size()},
               {"reencoded", sc_token}});

    auto sp = sd::sd_present(sc, {"claim_key_1", "claim_key_3"}, req,
                             actors.holder);
    auto sp_token = wire::encode_presentation(sp);
    write(dir, "sd_presentation", sp_token,
          Json{{"kind", "sd_presentation"},
               {"disclosed", sp.disclosed.size()},
               {"reencoded", sp_token}});

    mt::MtIssueOptions mopt;
    mopt.issued_at = 1754006400;
    mopt.rng = RandomSource(0x3333);
    auto mc = mt::mt_issue(actors.issuer, actors.holder.did,
                           actors.holder.signing_key.public_key(), claims,
                           mopt);
    auto mc_token = wire::encode_credential(mc);
    write(dir, "mt_credential", mc_token,
          Json{{"kind", "mt_credential"},
               {"root", base64url_encode(mc.root)},
               {"reencoded", mc_token}});

    auto mp = mt::mt_present(mc, {"claim_key_2"}, req, actors.holder);
    auto mp_token = wire::encode_presentation(mp);
    write(dir, "mt_presentation", mp_token,
          Json{{"kind", "mt_presentation"},
               {"siblings", mp.proof.siblings.size()},
               {"reencoded", mp_token}});
    return 0;
}
