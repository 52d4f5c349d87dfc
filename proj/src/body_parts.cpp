// Copyright 2026 The LiveVV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "livevv/body_parts.hpp"

namespace livevv::seg {

using capture::Joint;

PartGroup group_of(BodyPart part) {
  switch (part) {
    case BodyPart::Head:
    case BodyPart::Neck:
      return PartGroup::Head;
    case BodyPart::Chest:
    case BodyPart::Abdomen:
    case BodyPart::Pelvis:
      return PartGroup::Chest;
    case BodyPart::UpperArmLeft:
    case BodyPart::UpperArmRight:
    case BodyPart::LowerArmLeft:
    case BodyPart::LowerArmRight:
    case BodyPart::HandLeft:
    case BodyPart::HandRight:
      return PartGroup::Arm;
    case BodyPart::UpperLegLeft:
    case BodyPart::UpperLegRight:
    case BodyPart::LowerLegLeft:
    case BodyPart::LowerLegRight:
      return PartGroup::Leg;
  }
  return PartGroup::Leg;  // unreachable
}

const std::array<CylinderSpec, kPartCount>& default_cylinders() {
  static const std::array<CylinderSpec, kPartCount> specs = {{
      {BodyPart::Head, Joint::kHead, Joint::kNose, 0.15, 0.05},
      {BodyPart::Neck, Joint::kNeck, Joint::kHead, 0.10, 0.05},
      {BodyPart::Chest, Joint::kSpineChest, Joint::kNeck, 0.22, 0.05},
      {BodyPart::Abdomen, Joint::kSpineNavel, Joint::kSpineChest, 0.22, 0.05},
      {BodyPart::UpperArmLeft, Joint::kShoulderLeft, Joint::kElbowLeft, 0.10, 0.05},
      {BodyPart::UpperArmRight, Joint::kShoulderRight, Joint::kElbowRight, 0.10, 0.05},
      {BodyPart::LowerArmLeft, Joint::kElbowLeft, Joint::kWristLeft, 0.10, 0.05},
      {BodyPart::LowerArmRight, Joint::kElbowRight, Joint::kWristRight, 0.10, 0.05},
      {BodyPart::HandLeft, Joint::kWristLeft, Joint::kHandTipLeft, 0.08, 0.05},
      {BodyPart::HandRight, Joint::kWristRight, Joint::kHandTipRight, 0.08, 0.05},
      {BodyPart::UpperLegLeft, Joint::kHipLeft, Joint::kKneeLeft, 0.12, 0.05},
      {BodyPart::UpperLegRight, Joint::kHipRight, Joint::kKneeRight, 0.12, 0.05},
      {BodyPart::LowerLegLeft, Joint::kKneeLeft, Joint::kAnkleLeft, 0.12, 0.05},
      {BodyPart::LowerLegRight, Joint::kKneeRight, Joint::kAnkleRight, 0.12, 0.05},
      {BodyPart::Pelvis, Joint::kPelvis, Joint::kSpineNavel, 0.22, 0.05},
  }};
  return specs;
}

}  // namespace livevv::seg
