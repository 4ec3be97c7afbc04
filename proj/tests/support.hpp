#pragma once

#include "moser/numbers.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs `exe args...` through the shell, capturing stdout; stderr is dropped.
inline CommandResult run_command(const std::string& command_line) {
    CommandResult result;
    FILE* pipe = popen((command_line + " 2>/dev/null").c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command_line);
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Temp file that deletes itself; for feeding multiset inputs to the CLI.
class TempFile {
public:
    explicit TempFile(const std::string& content) {
        char name[] = "/tmp/moser_test_XXXXXX";
        int fd = mkstemp(name);
        if (fd < 0) throw std::runtime_error("mkstemp failed");
        path_ = name;
        FILE* f = fdopen(fd, "w");
        fwrite(content.data(), 1, content.size(), f);
        fclose(f);
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// ---- independent oracles (kept free of the production code paths) ----

// Eulerian numbers by the triangle recurrence alone.
inline moser::BigInt eulerian_recurrence(unsigned n, long long m) {
    if (n == 0) return m == 0 ? 1 : 0;
    if (m < 0 || static_cast<unsigned long long>(m) >= n) return 0;
    std::vector<std::vector<moser::BigInt>> rows(n + 1);
    rows[0] = {1};
    for (unsigned r = 1; r <= n; ++r) {
        rows[r].assign(r, 0);
        for (unsigned c = 0; c < r; ++c) {
            moser::BigInt up = c < rows[r - 1].size() ? rows[r - 1][c] : moser::BigInt(0);
            moser::BigInt left = (c >= 1 && c - 1 < rows[r - 1].size()) ? rows[r - 1][c - 1] : moser::BigInt(0);
            rows[r][c] = moser::BigInt(c + 1) * up + moser::BigInt(r - c) * left;
        }
    }
    return rows[n][static_cast<std::size_t>(m)];
}

// Partition counts by the classic bounded-part dynamic program.
inline unsigned long partition_count_dp(unsigned k) {
    std::vector<unsigned long> ways(k + 1, 0);
    ways[0] = 1;
    for (unsigned part = 1; part <= k; ++part)
        for (unsigned total = part; total <= k; ++total) ways[total] += ways[total - part];
    return ways[k];
}

// S(n,m) by enumerating assignments of n labeled items to m blocks and
// counting the surjective ones, divided by m!.
inline moser::BigInt stirling2_enumeration(unsigned n, unsigned m) {
    if (m == 0) return n == 0 ? 1 : 0;
    if (m > n) return 0;
    unsigned long long surjective = 0;
    std::vector<unsigned> assign(n, 0);
    while (true) {
        std::vector<bool> hit(m, false);
        for (unsigned a : assign) hit[a] = true;
        bool all = true;
        for (bool h : hit) all = all && h;
        if (all) ++surjective;
        std::size_t i = 0;
        while (i < n && assign[i] == m - 1) assign[i++] = 0;
        if (i == n) break;
        ++assign[i];
    }
    moser::BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(),
                moser::BigInt(static_cast<unsigned long>(surjective)).get_mpz_t(),
                moser::factorial(m).get_mpz_t());
    if (r != 0) throw std::logic_error("stirling2_enumeration: surjection count not divisible by m!");
    return q;
}

// Coefficients of x(x-1)...(x-i+1) by plain convolution over machine ints;
// safe for i <= 10 (coefficients stay far below 2^63).
inline std::vector<long> falling_power_coefficients(unsigned i) {
    std::vector<long> coeffs{1};
    for (unsigned m = 0; m < i; ++m) {
        std::vector<long> next(coeffs.size() + 1, 0);
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] += coeffs[d];
            next[d] -= static_cast<long>(m) * coeffs[d];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace testsupport
