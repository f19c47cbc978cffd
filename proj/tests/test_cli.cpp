#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "csdjwt/bytes.hpp"

// Drives the installed CLI binary end to end through temp files.

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("csdjwt_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const {
        return (path / name).string();
    }
};

int run(const std::string& cmd) {
    int status = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture_stderr(const std::string& cmd, const std::string& dump) {
    int rc = std::system((cmd + " >/dev/null 2>" + dump).c_str());
    (void)rc;  // the caller inspects stderr, not the status
    std::ifstream in(dump);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

const std::string kCli = CSDJWT_CLI_PATH;

}  // namespace

TEST_CASE("full cli round trip per mechanism") {
    TempDir tmp;
    std::string reg = tmp / "registry.json";

    REQUIRE(run(kCli + " keygen --role issuer --did did:ex:uni --registry " +
                reg + " --out-dir " + tmp.path.string() + " --seed 101") == 0);
    REQUIRE(run(kCli + " keygen --role holder --did did:ex:bob --registry " +
                reg + " --out-dir " + tmp.path.string() + " --seed 202") == 0);

    // duplicate registration fails and must not clobber existing keys
    CHECK(run(kCli + " keygen --role holder --did did:ex:bob --registry " +
              reg + " --out-dir " + tmp.path.string()) != 0);

    CHECK(fs::exists(tmp / "did_ex_uni.sig.json"));
    CHECK(fs::exists(tmp / "did_ex_uni.acc.json"));
    CHECK(fs::exists(tmp / "did_ex_uni.acc.pub.json"));
    CHECK(fs::exists(tmp / "did_ex_bob.sig.json"));

    std::string claims = tmp / "claims.json";
    {
        std::ofstream out(claims);
        out << R"({"degree":"MSc","honours":true,"year":2024})";
    }
    std::string nonce = csdjwt::base64url_encode(csdjwt::Drbg(9).bytes(16));

    for (std::string mech : {"csd", "sd", "mt"}) {
        std::string cred = tmp / (mech + ".cred");
        std::string vp = tmp / (mech + ".vp");
        REQUIRE(run(kCli + " issue --registry " + reg + " --keys " +
                    tmp.path.string() + " --issuer did:ex:uni" +
                    " --holder did:ex:bob --claims " + claims +
                    " --mechanism " + mech + " --out " + cred) == 0);
        REQUIRE(run(kCli + " present --credential " + cred + " --keys " +
                    tmp.path.string() + " --holder did:ex:bob" +
                    " --disclose degree --nonce " + nonce +
                    " --audience vrf-9 --out " + vp) == 0);
        CHECK(run(kCli + " verify --presentation " + vp + " --registry " +
                  reg + " --nonce " + nonce + " --audience vrf-9") == 0);

        // wrong nonce: exit 13 (10 + nonce_mismatch), reason on stderr
        std::string other =
            csdjwt::base64url_encode(csdjwt::Drbg(10).bytes(16));
        CHECK(run(kCli + " verify --presentation " + vp + " --registry " +
                  reg + " --nonce " + other + " --audience vrf-9") == 13);
        auto err = capture_stderr(
            kCli + " verify --presentation " + vp + " --registry " + reg +
                " --nonce " + other + " --audience vrf-9",
            tmp / "err.txt");
        CHECK(err.find("nonce_mismatch") != std::string::npos);

        // wrong audience
        CHECK(run(kCli + " verify --presentation " + vp + " --registry " +
                  reg + " --nonce " + nonce + " --audience other") == 15);

        // replay through a persistent nonce store: accept then reject(14)
        std::string store = tmp / (mech + ".nonces");
        CHECK(run(kCli + " verify --presentation " + vp + " --registry " +
                  reg + " --nonce " + nonce + " --audience vrf-9" +
                  " --nonce-store " + store) == 0);
        CHECK(run(kCli + " verify --presentation " + vp + " --registry " +
                  reg + " --nonce " + nonce + " --audience vrf-9" +
                  " --nonce-store " + store) == 14);

        // disclosing an unknown key fails
        CHECK(run(kCli + " present --credential " + cred + " --keys " +
                  tmp.path.string() + " --holder did:ex:bob" +
                  " --disclose nope --nonce " + nonce +
                  " --audience vrf-9 --out " + vp) != 0);
    }
}

TEST_CASE("verify rejects garbage tokens with the decode exit code") {
    TempDir tmp;
    std::string reg = tmp / "registry.json";
    REQUIRE(run(kCli + " keygen --role issuer --did did:ex:i --registry " +
                reg + " --out-dir " + tmp.path.string() + " --seed 1") == 0);
    std::string junk = tmp / "junk.vp";
    {
        std::ofstream out(junk);
        out << "zzz.zzz.zzz~!!\n";
    }
    std::string nonce = csdjwt::base64url_encode(csdjwt::Drbg(11).bytes(16));
    CHECK(run(kCli + " verify --presentation " + junk + " --registry " + reg +
              " --nonce " + nonce + " --audience a") == 3);
}

TEST_CASE("bench subcommands emit stable csv schemas") {
    TempDir tmp;
    std::string storage_csv = tmp / "storage.csv";
    REQUIRE(run(kCli +
                " bench-storage --mechanism csd,sd --claims 1,5 --seed 7 "
                "--out " +
                storage_csv) == 0);
    std::ifstream in(storage_csv);
    std::string header;
    std::getline(in, header);
    CHECK(header == "mechanism,claims,credential_bytes");
    size_t rows = 0;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) ++rows;
    CHECK(rows == 4);  // 2 mechanisms x 2 claim counts

    std::string vp_csv = tmp / "vp.csv";
    REQUIRE(run(kCli +
                " bench-vp --mechanism csd --claims 4 --disclose 0,0.5 "
                "--seed 7 --out " +
                vp_csv) == 0);
    std::ifstream in2(vp_csv);
    std::getline(in2, header);
    CHECK(header == "mechanism,claims,disclosed,presentation_bytes");
    std::vector<std::string> lines;
    for (std::string line; std::getline(in2, line);)
        if (!line.empty()) lines.push_back(line);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "csd,4,1," + lines[0].substr(lines[0].rfind(',') + 1));
    CHECK(lines[1].substr(0, 6) == "csd,4,");

    // determinism of size columns under a fixed seed
    std::string vp_csv2 = tmp / "vp2.csv";
    REQUIRE(run(kCli +
                " bench-vp --mechanism csd --claims 4 --disclose 0,0.5 "
                "--seed 7 --out " +
                vp_csv2) == 0);
    std::ifstream a(vp_csv), b(vp_csv2);
    std::string sa((std::istreambuf_iterator<char>(a)),
                   std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)),
                   std::istreambuf_iterator<char>());
    CHECK(sa == sb);
}
