#include "khop/log.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace khop {

std::string TransmissionLog::to_csv() const {
    std::ostringstream out;
    out << "slot,kind,from,to,chunk_id,k_remaining,bytes,outcome\n";
    for (const TxRecord& r : records) {
        out << r.slot << ',' << to_string(r.kind) << ',' << r.from << ',' << r.to << ','
            << r.chunk_id << ',' << r.k_remaining << ',' << r.bytes << ',' << to_string(r.outcome)
            << '\n';
    }
    return out.str();
}

void TransmissionLog::write_csv(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open log file: " + path);
    f << to_csv();
}

uint64_t TransmissionLog::digest() const {
    const std::string text = to_csv();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace khop
