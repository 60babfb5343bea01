#pragma once

#include <cstdint>

namespace sbvr2ocl {

// Index-based handles into a Vocabulary's declaration tables. An id is only
// meaningful together with the Vocabulary that issued it.
struct ObjectTypeId {
    int32_t index = -1;
    bool valid() const { return index >= 0; }
    friend bool operator==(ObjectTypeId, ObjectTypeId) = default;
    friend auto operator<=>(ObjectTypeId, ObjectTypeId) = default;
};

struct IndividualId {
    int32_t index = -1;
    bool valid() const { return index >= 0; }
    friend bool operator==(IndividualId, IndividualId) = default;
    friend auto operator<=>(IndividualId, IndividualId) = default;
};

struct FactTypeId {
    int32_t index = -1;
    bool valid() const { return index >= 0; }
    friend bool operator==(FactTypeId, FactTypeId) = default;
    friend auto operator<=>(FactTypeId, FactTypeId) = default;
};

struct AttributeId {
    int32_t index = -1;
    bool valid() const { return index >= 0; }
    friend bool operator==(AttributeId, AttributeId) = default;
    friend auto operator<=>(AttributeId, AttributeId) = default;
};

struct CharacteristicId {
    int32_t index = -1;
    bool valid() const { return index >= 0; }
    friend bool operator==(CharacteristicId, CharacteristicId) = default;
    friend auto operator<=>(CharacteristicId, CharacteristicId) = default;
};

} // namespace sbvr2ocl
