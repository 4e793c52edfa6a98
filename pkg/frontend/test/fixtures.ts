/** Canned responses captured verbatim from the running session service. */

export const FIXTURES = {
  "create": {
    "id": "sess1",
    "version": 0,
    "n": 2,
    "alternatives": [
      "A",
      "B",
      "C",
      "D",
      "E",
      "F",
      "H",
      "I",
      "L",
      "M"
    ],
    "criteria": [
      "Mat",
      "Phy",
      "Com"
    ],
    "reference": [
      "A",
      "B",
      "C",
      "D",
      "E",
      "F",
      "H",
      "I",
      "L",
      "M"
    ],
    "compatible": true,
    "epsilon": 1.0,
    "statements": [],
    "sorting": null
  },
  "hasse_v0": {
    "kind": "nec",
    "nodes": [
      [
        "A"
      ],
      [
        "B"
      ],
      [
        "C"
      ],
      [
        "D"
      ],
      [
        "E"
      ],
      [
        "F"
      ],
      [
        "H"
      ],
      [
        "I"
      ],
      [
        "L"
      ],
      [
        "M"
      ]
    ],
    "arcs": [
      [
        0,
        9
      ],
      [
        2,
        5
      ],
      [
        3,
        1
      ],
      [
        3,
        6
      ],
      [
        4,
        1
      ],
      [
        5,
        8
      ],
      [
        6,
        5
      ],
      [
        9,
        8
      ]
    ]
  },
  "add_c1": {
    "version": 1,
    "compatible": true,
    "epsilon": 1.0
  },
  "summary_v1": {
    "id": "sess1",
    "version": 1,
    "n": 2,
    "alternatives": [
      "A",
      "B",
      "C",
      "D",
      "E",
      "F",
      "H",
      "I",
      "L",
      "M"
    ],
    "criteria": [
      "Mat",
      "Phy",
      "Com"
    ],
    "reference": [
      "A",
      "B",
      "C",
      "D",
      "E",
      "F",
      "H",
      "I",
      "L",
      "M"
    ],
    "compatible": true,
    "epsilon": 1.0,
    "statements": [
      {
        "kind": "holistic-strict",
        "alternatives": [
          "M",
          "D"
        ],
        "criterion": null,
        "credibility": 1,
        "author": "dean",
        "added_at": "2026-08-11T02:47:49.228263+00:00"
      }
    ],
    "sorting": null
  },
  "hasse_v1": {
    "kind": "nec",
    "nodes": [
      [
        "A"
      ],
      [
        "B"
      ],
      [
        "C"
      ],
      [
        "D"
      ],
      [
        "E"
      ],
      [
        "F"
      ],
      [
        "H"
      ],
      [
        "I"
      ],
      [
        "L"
      ],
      [
        "M"
      ]
    ],
    "arcs": [
      [
        0,
        9
      ],
      [
        2,
        5
      ],
      [
        3,
        1
      ],
      [
        3,
        6
      ],
      [
        4,
        1
      ],
      [
        5,
        8
      ],
      [
        6,
        5
      ],
      [
        9,
        3
      ]
    ]
  },
  "matrix_v1": {
    "kind": "nec",
    "order": [
      "A",
      "B",
      "C",
      "D",
      "E",
      "F",
      "H",
      "I",
      "L",
      "M"
    ],
    "bits": [
      [
        true,
        true,
        false,
        true,
        false,
        true,
        true,
        false,
        true,
        true
      ],
      [
        false,
        true,
        false,
        false,
        false,
        false,
        false,
        false,
        false,
        false
      ],
      [
        false,
        false,
        true,
        false,
        false,
        true,
        false,
        false,
        true,
        false
      ],
      [
        false,
        true,
        false,
        true,
        false,
        true,
        true,
        false,
        true,
        false
      ],
      [
        false,
        true,
        false,
        false,
        true,
        false,
        false,
        false,
        false,
        false
      ],
      [
        false,
        false,
        false,
        false,
        false,
        true,
        false,
        false,
        true,
        false
      ],
      [
        false,
        false,
        false,
        false,
        false,
        true,
        true,
        false,
        true,
        false
      ],
      [
        false,
        false,
        false,
        false,
        false,
        false,
        false,
        true,
        false,
        false
      ],
      [
        false,
        false,
        false,
        false,
        false,
        false,
        false,
        false,
        true,
        false
      ],
      [
        false,
        true,
        false,
        true,
        false,
        true,
        true,
        false,
        true,
        true
      ]
    ],
    "boundary": [
      [
        "A",
        "B"
      ],
      [
        "A",
        "D"
      ],
      [
        "A",
        "F"
      ],
      [
        "A",
        "H"
      ],
      [
        "M",
        "B"
      ],
      [
        "M",
        "D"
      ],
      [
        "M",
        "F"
      ],
      [
        "M",
        "H"
      ]
    ]
  },
  "revert_0": {
    "version": 0
  },
  "add_reversal": {
    "version": 2,
    "compatible": false,
    "epsilon": -0.0
  },
  "diagnose": {
    "compatible": false,
    "minimal_sets": [
      [
        0
      ],
      [
        1
      ]
    ],
    "exhaustive": true,
    "statements": [
      "M > D",
      "D > M"
    ]
  },
  "relations_conflict": {
    "code": "incompatible_session",
    "message": "no compatible value function; revise or diagnose the statements",
    "details": null
  }
} as const;
