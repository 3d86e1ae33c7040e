#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "ddmap/error.hpp"
#include "ddmap/format.hpp"
#include "ddmap/ingest.hpp"

namespace ddmap {
namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(strip(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::vector<ImpactRecord> parse_impacts(std::istream& in) {
    std::vector<ImpactRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = strip(raw);
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) {
            line.remove_prefix(3);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split_fields(line);
        if (!have_header) {
            if (fields.size() != 3 || fields[0] != "n" || fields[1] != "v_in" ||
                fields[2] != "v_out") {
                throw ParseError(line_no, "expected header 'n,v_in,v_out'");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
        }
        ImpactRecord rec;
        try {
            const double n = parse_number(fields[0]);
            if (n != std::floor(n) || std::abs(n) > 9.0e15) {
                throw DomainError("impact index must be an integer");
            }
            rec.index = static_cast<long long>(n);
            rec.v_in = parse_number(fields[1]);
            rec.v_out = parse_number(fields[2]);
        } catch (const DomainError& e) {
            throw ParseError(line_no, e.what());
        }
        if (!std::isfinite(rec.v_in) || !std::isfinite(rec.v_out)) {
            throw ValidationError(line_no, "speeds must be finite");
        }
        if (rec.v_in < 0.0 || rec.v_out < 0.0) {
            throw ValidationError(line_no, "speeds must be nonnegative (v_in, v_out >= 0)");
        }
        if (!records.empty() && rec.index <= records.back().index) {
            throw ValidationError(line_no, "impact indices must be strictly increasing");
        }
        records.push_back(rec);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing header 'n,v_in,v_out'");
    }
    return records;
}

void write_impacts(std::ostream& out, std::span<const ImpactRecord> records) {
    out << "n,v_in,v_out\n";
    for (const ImpactRecord& r : records) {
        out << r.index << ',' << format_double(r.v_in) << ',' << format_double(r.v_out) << '\n';
    }
}

EnergySeries energy_series(std::span<const ImpactRecord> records) {
    if (records.size() < 2) {
        throw DomainError("energy_series: need at least 2 impact records");
    }
    EnergySeries s;
    s.pre_impact.reserve(records.size());
    s.post_impact.reserve(records.size());
    for (const ImpactRecord& r : records) {
        s.pre_impact.push_back(r.v_in * r.v_in);
        s.post_impact.push_back(r.v_out * r.v_out);
    }
    for (std::size_t n = 1; n < records.size(); ++n) {
        s.gains.push_back(s.pre_impact[n] - s.post_impact[n - 1]);
        s.losses.push_back(s.post_impact[n] - s.pre_impact[n]);
    }
    return s;
}

}  // namespace ddmap
