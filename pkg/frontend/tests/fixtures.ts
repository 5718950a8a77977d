// Responses captured verbatim from a live `aclbdd serve` run against
// sample.acl (and, for the diff fixtures, a copy with `eq 80` changed
// to `eq 81`). Tests mock fetch with these so they exercise the real
// wire format without a running service.

export const session_created = {
  "session": "c23ac12b5cdf",
  "variables": 83,
  "widths": [
    8,
    16,
    3
  ]
};

export const ruleset_loaded = {
  "session": "c23ac12b5cdf",
  "slot": "old",
  "rules": 3,
  "variables": 83,
  "node_count": 68,
  "compile_seconds": 0.00053
};

export const query_default = {
  "slot": "old",
  "table": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 65535,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 2,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 80,
          "hi": 80,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 120,
          "hi": 120,
          "elide": false
        },
        {
          "lo": 17,
          "hi": 17,
          "elide": false
        },
        {
          "lo": 112,
          "hi": 112,
          "elide": false
        },
        {
          "lo": 100,
          "hi": 100,
          "elide": false
        }
      ]
    ]
  },
  "rows": 3,
  "elapsed_seconds": 0.088993
};

export const query_udp = {
  "slot": "old",
  "table": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 2,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ]
    ]
  },
  "rows": 1,
  "elapsed_seconds": 0.028758
};

export const query_port_first = {
  "slot": "old",
  "table": {
    "columns": [
      "Port",
      "Proto",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      65535,
      7,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 0,
          "hi": 52,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 54,
          "hi": 79,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 80,
          "hi": 80,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 80,
          "hi": 80,
          "elide": true
        },
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 120,
          "hi": 120,
          "elide": false
        },
        {
          "lo": 17,
          "hi": 17,
          "elide": false
        },
        {
          "lo": 112,
          "hi": 112,
          "elide": false
        },
        {
          "lo": 100,
          "hi": 100,
          "elide": false
        }
      ],
      [
        {
          "lo": 81,
          "hi": 65535,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ]
    ]
  },
  "rows": 6,
  "elapsed_seconds": 0.054943
};

export const query_dest4_first = {
  "slot": "old",
  "table": {
    "columns": [
      "Dest4",
      "Port",
      "Proto",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3"
    ],
    "maxima": [
      255,
      65535,
      7,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 0,
          "hi": 99,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 52,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 0,
          "hi": 99,
          "elide": true
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 0,
          "hi": 99,
          "elide": true
        },
        {
          "lo": 54,
          "hi": 65535,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 52,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": true
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": true
        },
        {
          "lo": 54,
          "hi": 79,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": true
        },
        {
          "lo": 80,
          "hi": 80,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": true
        },
        {
          "lo": 80,
          "hi": 80,
          "elide": true
        },
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 120,
          "hi": 120,
          "elide": false
        },
        {
          "lo": 17,
          "hi": 17,
          "elide": false
        },
        {
          "lo": 112,
          "hi": 112,
          "elide": false
        }
      ],
      [
        {
          "lo": 100,
          "hi": 100,
          "elide": true
        },
        {
          "lo": 81,
          "hi": 65535,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 101,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 52,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 101,
          "hi": 255,
          "elide": true
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ],
      [
        {
          "lo": 101,
          "hi": 255,
          "elide": true
        },
        {
          "lo": 54,
          "hi": 65535,
          "elide": false
        },
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        }
      ]
    ]
  },
  "rows": 12,
  "elapsed_seconds": 0.14667
};

export const query_summary_pp = {
  "slot": "old",
  "table": {
    "columns": [
      "Proto",
      "Port"
    ],
    "maxima": [
      7,
      65535
    ],
    "rows": [
      [
        {
          "lo": 1,
          "hi": 1,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 65535,
          "elide": false
        }
      ],
      [
        {
          "lo": 2,
          "hi": 2,
          "elide": false
        },
        {
          "lo": 53,
          "hi": 53,
          "elide": false
        }
      ],
      [
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 80,
          "hi": 80,
          "elide": false
        }
      ]
    ]
  },
  "rows": 3,
  "elapsed_seconds": 0.082975
};

export const diff_changed = {
  "equivalent": false,
  "now_allowed": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 81,
          "hi": 81,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 120,
          "hi": 120,
          "elide": false
        },
        {
          "lo": 17,
          "hi": 17,
          "elide": false
        },
        {
          "lo": 112,
          "hi": 112,
          "elide": false
        },
        {
          "lo": 100,
          "hi": 100,
          "elide": false
        }
      ]
    ]
  },
  "now_denied": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": [
      [
        {
          "lo": 3,
          "hi": 3,
          "elide": false
        },
        {
          "lo": 80,
          "hi": 80,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 0,
          "hi": 255,
          "elide": false
        },
        {
          "lo": 120,
          "hi": 120,
          "elide": false
        },
        {
          "lo": 17,
          "hi": 17,
          "elide": false
        },
        {
          "lo": 112,
          "hi": 112,
          "elide": false
        },
        {
          "lo": 100,
          "hi": 100,
          "elide": false
        }
      ]
    ]
  }
};

export const diff_equivalent = {
  "equivalent": true,
  "now_allowed": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": []
  },
  "now_denied": {
    "columns": [
      "Proto",
      "Port",
      "Src1",
      "Src2",
      "Src3",
      "Src4",
      "Dest1",
      "Dest2",
      "Dest3",
      "Dest4"
    ],
    "maxima": [
      7,
      65535,
      255,
      255,
      255,
      255,
      255,
      255,
      255,
      255
    ],
    "rows": []
  }
};

export const stats_old = {
  "rules": 3,
  "variables": 83,
  "node_count": 68,
  "max_depth": 51,
  "packets": "1208944266358707179225088",
  "slot": "old"
};

export const redundant_old = {
  "slot": "old",
  "indexes": [],
  "rules": [],
  "lines": []
};

export const load_error = {
  "code": "parse_error",
  "message": "1 bad line(s); first: rule needs at least: access-list ID ACTION PROTO SRC SMASK DST DMASK",
  "line": 1,
  "errors": [
    {
      "line": 1,
      "message": "rule needs at least: access-list ID ACTION PROTO SRC SMASK DST DMASK"
    }
  ]
};

export const query_error = {
  "code": "bad_condition",
  "message": "empty range 9..1 for Port"
};

export const budget_error = {
  "code": "row_budget",
  "message": "table exceeds 2 rows; constrain the query, summarize fewer fields, or raise the row budget"
};
