#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int run(const std::string& cmd) {
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string capture(const std::string& cmd) {
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    pclose(p);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli_exit <cli-binary>\n";
        return 2;
    }
    std::string cli = argv[1];
    int failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            std::cerr << "FAILED: " << what << "\n";
        }
    };

    expect(run(cli + " run --suite koszul --trials 2 > /dev/null") == 0,
           "passing suite exits 0");
    expect(run(cli + " run --suite nonsense 2> /dev/null") == 2, "unknown suite exits 2");
    expect(run(cli + " run --suite cartan --trials 0 2> /dev/null") == 2,
           "invalid trial count exits 2");
    expect(run(cli + " run --suite cartan --window bogus 2> /dev/null") == 2,
           "malformed window exits 2");
    expect(run(cli + " eval \"div (w_std) (d1)\" > /dev/null") == 0, "eval exits 0");
    expect(run(cli + " eval \"frobnicate (d1)\" 2> /dev/null") == 2,
           "unknown operation exits 2");
    expect(capture(cli + " eval \"div (w_std) (d1)\"") == "-1 * t^[-1,0]\n",
           "eval prints the canonical form");

    std::string a = capture(cli + " run --suite cartan --trials 5 --format json --seed 7");
    std::string b = capture(cli + " run --suite cartan --trials 5 --format json --seed 7");
    expect(!a.empty() && a == b, "json reports are byte-identical for a fixed config");
    std::string c = capture(cli + " run --suite cartan --trials 5 --format json --seed 8");
    expect(a != c, "different seeds change the sampled inputs");

    if (failures == 0) std::cout << "cli exit-code contract holds\n";
    return failures == 0 ? 0 : 1;
}
