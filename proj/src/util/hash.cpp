#include "dra/util/hash.hpp"

#include <array>

namespace dra {

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::string fnv1a64_hex(std::string_view data) {
    static constexpr std::array<char, 16> digits = {'0', '1', '2', '3', '4', '5', '6', '7',
                                                    '8', '9', 'a', 'b', 'c', 'd', 'e', 'f'};
    const std::uint64_t hash = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 0; i < 16; ++i) {
        out[15 - i] = digits[(hash >> (4 * i)) & 0xF];
    }
    return out;
}

std::string topics_digest(const std::vector<std::string>& topics) {
    std::string joined;
    for (const auto& topic : topics) {
        joined += topic;
        joined += '\x1f';
    }
    return fnv1a64_hex(joined);
}

} // namespace dra
