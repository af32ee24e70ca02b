#include "expasym/pole_set.hpp"
#include "expasym/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace expasym {

PoleSet filter_and_pair(const std::vector<std::pair<Complex, Complex>> &raw,
                        const SampleGrid & /*grid*/) {
    PoleSet ps;
    if (raw.empty()) return ps;

    double max_res = 0.0;
    for (const auto &[p, a] : raw) max_res = std::max(max_res, std::abs(a));

    std::vector<std::pair<Complex, Complex>> upper, lower;
    for (const auto &[p, a] : raw) {
        if (std::abs(p.imag()) < kPairingTolerance) {
            ps.discarded.push_back({p, a, "real-axis artefact"});
        } else if (std::abs(a) < kFroissartFactor * max_res) {
            ps.discarded.push_back({p, a, "froissart doublet"});
        } else if (p.imag() > 0.0) {
            upper.emplace_back(p, a);
        } else {
            lower.emplace_back(p, a);
        }
    }

    std::sort(upper.begin(), upper.end(),
              [](const auto &a, const auto &b) { return a.first.imag() < b.first.imag(); });

    for (const auto &[p, a] : upper) {
        int match = -1;
        double best = kPairingTolerance;
        for (int i = 0; i < static_cast<int>(lower.size()); ++i) {
            double d = std::abs(p - std::conj(lower[i].first));
            if (d <= best) { best = d; match = i; }
        }
        if (match >= 0 &&
            std::abs(a - std::conj(lower[match].second)) <= kPairingTolerance) {
            ps.pairs.push_back({p, a, 0});
            lower.erase(lower.begin() + match);
        } else {
            ps.discarded.push_back({p, a, "unpaired"});
        }
    }
    for (const auto &[p, a] : lower)
        ps.discarded.push_back({p, a, "unpaired"});

    for (int i = 0; i < static_cast<int>(ps.pairs.size()); ++i)
        ps.pairs[i].pair_index = i + 1;
    return ps;
}

std::string pole_set_json(const PoleSet &ps) {
    std::ostringstream os;
    os << "{\n  \"pairs\": [\n";
    for (size_t i = 0; i < ps.pairs.size(); ++i) {
        const PolePair &pp = ps.pairs[i];
        os << "    {\"pair_index\": " << pp.pair_index
           << ", \"pole_re\": " << fmt17(pp.pole.real())
           << ", \"pole_im\": " << fmt17(pp.pole.imag())
           << ", \"residue_re\": " << fmt17(pp.residue.real())
           << ", \"residue_im\": " << fmt17(pp.residue.imag()) << "}"
           << (i + 1 < ps.pairs.size() ? "," : "") << "\n";
    }
    os << "  ],\n  \"discarded\": [\n";
    for (size_t i = 0; i < ps.discarded.size(); ++i) {
        const DiscardedPole &d = ps.discarded[i];
        os << "    {\"pole_re\": " << fmt17(d.pole.real())
           << ", \"pole_im\": " << fmt17(d.pole.imag())
           << ", \"residue_re\": " << fmt17(d.residue.real())
           << ", \"residue_im\": " << fmt17(d.residue.imag())
           << ", \"reason\": \"" << d.reason << "\"}"
           << (i + 1 < ps.discarded.size() ? "," : "") << "\n";
    }
    os << "  ]\n}";
    return os.str();
}

void write_pole_set_json(const PoleSet &ps, const std::string &path,
                         const std::string &config_json) {
    std::string body = pole_set_json(ps);
    if (!config_json.empty()) {
        // embed the resolved run configuration for provenance
        auto pos = body.find('{');
        body.insert(pos + 1, "\n  \"config\": " + config_json + ",");
    }
    write_text_file(path, body + "\n");
}

} // namespace expasym
