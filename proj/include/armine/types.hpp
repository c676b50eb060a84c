#pragma once

#include <cstdint>

namespace armine {

using ItemId = std::uint32_t;  // dense id handed out by ItemDictionary
using Count = std::uint64_t;   // absolute support count

}  // namespace armine
