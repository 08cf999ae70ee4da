"""Bit strings of published covering sequences, codes and arrays.

Sequences are stored as printed, one string per sequence. Extension tables are stored row by
row as ``(string, overlap)`` pairs, the overlap being shared with the following row (the last
row wraps around to the first).
"""

# (n, R, printed length, bits)
SMALL_SEQUENCES = (
    (8, 1, 32, "00011011111001000001101011100101"),
    (8, 1, 35, "00010110110111000010001111011101001"),
    (8, 1, 37, "0001101111100100000110101110011100101"),
    (8, 1, 40, "0001101111100100000001000001101011100101"),
    (8, 2, 14, "00111011010010"),
    (9, 2, 20, "00010010001110110111"),
)

# (n, R, printed length, bits)
MERGED_SEQUENCES = (
    (
        10,
        1,
        175,
        "0000101000000001010010110010100101111101001011011100110110111011111101110111100011101111"
        "001001111110010000111100100010111001000110000010001101010100011010011000110100000001101",
    ),
    (
        10,
        1,
        177,
        "1101011111111010111100000101111001011011110011001111100110000111001100011010011000110110"
        "0100011011010101110110101001001101010000111010100000100101000001000000000010001010000100"
        "0",
    ),
    (
        11,
        1,
        283,
        "0011101101100111011010001110110101100101101011000101010110001001011100010010101000100101"
        "0100111010101001101001010011011100100110111111110101111111111011111111001111111110000101"
        "1111000011001110000110110010001101100000000011000000010000000000100000100001000001111010"
        "0000111100110001111",
    ),
    (
        12,
        1,
        597,
        "1010110011101101011001111100101100111111110110011111111101101111111110000110111111000010"
        "1000011000010100111100001010010000100101001000111100100100011101000110001110100110110111"
        "0100110110000110011011000100101101100010001100110001000100110000100010010001010001001001"
        "0101011001001010100000100101010001010101101000101011100100010101101010001010111111000101"
        "0111110111101011111010001101111101001011110110100101110001111010111000110110111100011011"
        "1001110011011100101001001110010100000110010010000011000000000001100000111100110000011110"
        "000001101111000000011111100000001011101010000101110101001110111010100",
    ),
    (
        13,
        1,
        1172,
        "1011100111110110111001111111001110011111100111100111111001101001011110011010001110000110"
        "1000111010110000001110101101001011101011010101000010110101010111001101010101111100000001"
        "0111110000100001111100001000100101000010001000100100100010001010100000100010101001011000"
        "1010100101000110101001010000011110010100000100011010000001000110011100010001100101001100"
        "0110010101101101100101011001110101010110011101101001100111011001000001110110010011110101"
        "1001001111100110010011110111110100111101111111000111011111110100110111111101111101111111"
        "0110101011111101101011110111011010111000000110101110001011101011100010000110111000100000"
        "0011100010000000000110000000000001111110101000011111101001000111111010001111111110100010"
        "1011111010001010111010100010101111011000011011110110001100111101100010010110011000100101"
        "0010000010010100110100100101001110111100010011101111000010111011110001101010111100011011"
        "0001010001101100001110001011000011100100110000111001111100001110010000000011100100011000"
        "1110010000101011100100001001101101000010011011100000100110111011001001101110100011011011"
        "1010001011000110100010110010110000101100101101111111001011011110100010110111101001100101"
        "1110100111000010101001110000",
    ),
    (
        14,
        1,
        2271,
        "1111011110101101111011110101011111011110101001011011110101001000011110101001000110001111"
        "0010001100010101110001100010100100001100010100111001000101100111001000101010111001000101"
        "0110110010001010100001010001010100001111001010100001101000100010001101000100000110101000"
        "1000001000000001000001000100001000001000111111000001000111011100001000111010110001000111"
        "0101110010001110101010010001110100001001101110100001000000010100001000001111111011000001"
        "1111110010101111111110010100000111110010100011001110010100011001000100100011001000000000"
        "0110010000001010110010000001001110010000001000011000000001000011011000001000011011101111"
        "0000110111010101010110111010101001011111010101001010011010101001010011001011001010011001"
        "1110000100110011110010010010011110010011111001110010011111111010110011111111011100011111"
        "1110111111011111110111111100010010111111100011010011111100011010010110100011010010101111"
        "0110100101011110001000101011110001011101011110001011010111110001011010110000101011010110"
        "0011000110101100011001001011100011001001001000011001001001100000101001001100001000011001"
        "1000010001111011000010001101111110010001101111101001010101111101001000010111101001000010"
        "0100110010000100101001010000100101010100000100101010011101101101010011101110011010011101"
        "1101000000111011101000111101011101000111000011101000111001110100000111001110101110011001"
        "1101011111000011101011111001111101011111001101010011111001101011101000001101011101001100"
        "0010111010011010110111010011011111111010011011100111010011011100101110011011100101111010"
        "0111001011110011110001011110011110110001110011110110110010011110110110010111011010110010"
        "1110110001000101110110000101100110110000101101100010100101101100011000101101100011111001"
        "1011000111110110011110111110110011101100110110011101101010110011101100101101011101100101"
        "1011011011001011010010011001011010001001101011010001001110101010001001110001110001001110"
        "0000010010011100000010101001100000010101101010010010101101010001011000001010001011000000"
        "0101010110000000101110001000000101110011000111011110011000111110110011000111100001011000"
        "1111000000001001111000000011110111000000011100110101000011100110110100111100110110100010"
        "1001101101000000001101101000011011111101000011011011111000011011011100000011011011100001"
        "11101101110000110000001110000110000011000100110000011000010110000011000",
    ),
    (
        11,
        2,
        111,
        "1100111010010011100111010111001011111010111000000011010111001000000010111001010001111011"
        "00101000110110000101000",
    ),
    (
        12,
        2,
        161,
        "1000101000010100010100000000100010000000011011000000001101011010000110101100111101010110"
        "0111011000010011101100011100100110001110010111110011001011111111100101111",
    ),
    (
        13,
        2,
        292,
        "1111111001011111111100101001101010010100110110101010011011000110001101100011001010110001"
        "1001011011001100101101000001010110100000111011010000010010011110001001001110101110100111"
        "0101111111011110111111101110000011110111000001000111100000100000010000010000000111001000"
        "0000111000100001011100010000",
    ),
    (
        14,
        2,
        525,
        "0010111101001000010111101001111111011101001111111011111001111111011000110011111011000110"
        "1101100010001101101100001111101101100001110001101100001110010011010001110010011100110001"
        "0100111001100101011001001100101011101111110101011101111000000101101111000000010001111000"
        "0000110011010010000110011010100100110011010100100101101010100100101101010111100101101010"
        "1100110101110101100110101111011110110101111011101001011110011101001011101110000001011101"
        "1100101000101011100101000100000011101000100000000110000100000000110010001010000110010",
    ),
    (
        15,
        2,
        907,
        "0000101111001100000010111100110010000101110011001000001011101100100000101001100010000010"
        "1001000000000010100100001110100000010000111010010100100011101001010011101110111101001110"
        "1110111010011110111011101001000001110110100100000110010001010000011001001010000001100100"
        "1010101100111100101010110010111101111011001011110101100011111111010110001101000101011000"
        "1101001110010110110100111001001111000111100100111100001001010011110000100110111111000010"
        "0110111110100011111011111010001011011101101000101101110011110011000111001111001101110011"
        "1111001101110001000100110111000101001011010100010100101100110100010010110011011010011011"
        "0011011010000110001101101000011011100101110001101110010110000001111001011000001110000111"
        "1000001110000011001111111000001100110000100000110011000101100011001100010101111100110001"
        "0101001110100001010100111010111001010011101011111110111110101111111011010111010101001101"
        "011101010110000001110101011",
    ),
    (
        13,
        3,
        93,
        "0110111110111011011111011000101111101100011010000110001101000001001110100000100000010000"
        "01000",
    ),
    (
        15,
        3,
        406,
        "1000000101001011000000101001000001000101001000001000000101100101000000101100100011110101"
        "1001000111111000111010111111000111011111010111111011111010111110001100110111110001100011"
        "0111100011000110110001011101110110001011101101111001111101101111001101010000011001101010"
        "0000111001100100000111001101110000101001101110000101000000000000101000000011101001000000"
        "011101011010011111101011010011111001100101011111001100",
    ),
)

# the printed (14,3) sequence is cut short; its extension table is complete
# (n, R, printed length, (printed bit total, printed overlap total), codewords, table)
CODE_TABLES = (
    (
        10,
        1,
        175,
        (260, 85),
        (
            "00001010000",
            "00101001011",
            "10100101111",
            "10110111001",
            "11011101111",
            "11011101111",
            "01110111100",
            "11110010011",
            "11110010000",
            "11001000101",
            "00100011000",
            "01000110101",
            "10001101001",
            "00011010000",
        ),
        (
            ("00001010000000010100", 7),
            ("00101001011001010010", 7),
            ("10100101111101001011", 4),
            ("10110111001101101110", 7),
            ("11011101111110111011", 7),
            ("01110111100011101111", 4),
            ("11110010011111100100", 9),
            ("11110010000111100100", 7),
            ("11001000101110010001", 7),
            ("00100011000001000110", 8),
            ("01000110101010001101", 8),
            ("10001101001100011010", 8),
            ("00011010000000110100", 2),
        ),
    ),
    (
        10,
        1,
        177,
        (260, 83),
        (
            "11010111111",
            "01011110000",
            "10111100101",
            "11100110011",
            "11001100001",
            "00110001101",
            "10001101100",
            "11011010101",
            "01101010010",
            "10101000011",
            "10000010010",
            "00000100000",
            "00001000101",
        ),
        (
            ("11010111111110101111", 7),
            ("01011110000010111100", 8),
            ("10111100101101111001", 6),
            ("11100110011111001100", 8),
            ("11001100001110011000", 7),
            ("00110001101001100011", 6),
            ("10001101100100011011", 5),
            ("11011010101110110101", 7),
            ("01101010010011010100", 7),
            ("10101000011101010000", 5),
            ("10000010010100000100", 8),
            ("00000100000000001000", 8),
            ("00001000101000010001", 1),
        ),
    ),
    (
        11,
        1,
        283,
        (420, 137),
        (
            "00111011011",
            "01110110100",
            "10110101100",
            "10101100010",
            "10001001011",
            "10001001010",
            "01010100111",
            "01010011010",
            "01001101110",
            "10111111110",
            "10111111111",
            "11111111001",
            "11111000010",
            "11100001100",
            "00011011001",
            "01100000000",
            "00000010000",
            "00001000001",
            "00000111101",
            "00011110011",
        ),
        (
            ("001110110110011101101", 9),
            ("011101101000111011010", 7),
            ("101101011001011010110", 7),
            ("101011000101010110001", 5),
            ("100010010111000100101", 10),
            ("100010010101000100101", 4),
            ("010101001110101010011", 8),
            ("010100110100101001101", 8),
            ("010011011100100110111", 5),
            ("101111111101011111111", 10),
            ("101111111111011111111", 8),
            ("111111110011111111100", 7),
            ("111110000101111100001", 8),
            ("111000011001110000110", 6),
            ("000110110010001101100", 5),
            ("011000000000110000000", 6),
            ("000000100000000001000", 8),
            ("000010000010000100000", 5),
            ("000001111010000011110", 8),
            ("000111100110001111001", 3),
        ),
    ),
    (
        11,
        2,
        111,
        (150, 39),
        (
            "110011101001001",
            "111010111001011",
            "110101110000000",
            "010111001000000",
            "100101000111101",
            "001010001101100",
        ),
        (
            ("1100111010010011100111010", 6),
            ("1110101110010111110101110", 9),
            ("1101011100000001101011100", 8),
            ("0101110010000000101110010", 5),
            ("1001010001111011001010001", 9),
            ("0010100011011000010100011", 2),
        ),
    ),
    (
        12,
        2,
        161,
        (216, 55),
        (
            "1000101000010",
            "0100000000100",
            "1000000001101",
            "0000110101101",
            "1010110011110",
            "1001110110000",
            "1000111001001",
            "1100101111100",
            "1100101111111",
        ),
        (
            ("100010100001010001010000", 6),
            ("010000000010001000000001", 10),
            ("100000000110110000000011", 6),
            ("000011010110100001101011", 6),
            ("101011001111010101100111", 6),
            ("100111011000010011101100", 3),
            ("100011100100110001110010", 6),
            ("110010111110011001011111", 11),
            ("110010111111111001011111", 1),
        ),
    ),
    (
        13,
        2,
        292,
        (400, 108),
        (
            "1111111001011",
            "1001010011010",
            "0101001101101",
            "0011011000110",
            "0110001100101",
            "0011001011011",
            "0101101000001",
            "1011010000011",
            "0001001001111",
            "0100111010111",
            "1011111110111",
            "1111011100000",
            "1110000010001",
            "1000001000000",
            "0000000111001",
            "0111000100001",
        ),
        (
            ("1111111001011111111100101", 6),
            ("1001010011010100101001101", 10),
            ("0101001101101010100110110", 8),
            ("0011011000110001101100011", 8),
            ("0110001100101011000110010", 8),
            ("0011001011011001100101101", 7),
            ("0101101000001010110100000", 11),
            ("1011010000011101101000001", 4),
            ("0001001001111000100100111", 7),
            ("0100111010111010011101011", 4),
            ("1011111110111101111111011", 7),
            ("1111011100000111101110000", 7),
            ("1110000010001111000001000", 10),
            ("1000001000000100000100000", 5),
            ("0000000111001000000011100", 6),
            ("0111000100001011100010000", 0),
        ),
    ),
    (
        13,
        3,
        93,
        (125, 32),
        (
            "0110111110111",
            "1111101100010",
            "0110001101000",
            "1101000001001",
            "0100000100000",
        ),
        (
            ("0110111110111011011111011", 8),
            ("1111101100010111110110001", 7),
            ("0110001101000011000110100", 6),
            ("1101000001001110100000100", 10),
            ("0100000100000010000010000", 1),
        ),
    ),
    (
        14,
        3,
        239,
        (280, 41),
        (
            "110011000000010",
            "011010101001111",
            "010011101011110",
            "110101111000100",
            "000101100001001",
            "101101011111101",
            "111111110001101",
            "000111011001010",
            "001001000101000",
            "010100001100010",
        ),
        (
            ("1100110000000101100110000000", 1),
            ("0110101010011110110101010011", 6),
            ("0100111010111100100111010111", 8),
            ("1101011110001001101011110001", 4),
            ("0001011000010010001011000010", 2),
            ("1011010111111011011010111111", 6),
            ("1111111100011011111111100011", 5),
            ("0001110110010100001110110010", 4),
            ("0010010001010000010010001010", 5),
            ("0101000011000100101000011000", 0),
        ),
    ),
)

# (printed length, printed bit total, printed overlap total)
HAMMING_PRINTED = (3516, 4064, 548)
HAMMING_TABLE = (
    ("00001011101010100001011101010", 1),
    ("00010011001110100010011001110", 1),
    ("00001010001110100001010001110", 7),
    ("00011100111111100011100111111", 8),
    ("00111111111010100111111111010", 1),
    ("00010011100101100010011100101", 5),
    ("00101101101110100101101101110", 1),
    ("00000111100001100000111100001", 6),
    ("1000010000100001000", 8),
    ("00001000100010100001000100010", 9),
    ("00010001001001100010001001001", 9),
    ("00100100111101100100100111101", 8),
    ("00111101010110100111101010110", 1),
    ("00011001111110100011001111110", 1),
    ("00011011010010100011011010010", 4),
    ("00101011111110100101011111110", 1),
    ("00001101111010100001101111010", 1),
    ("00001110011001100001110011001", 7),
    ("00110011011010100110011011010", 1),
    ("00000110101110100000110101110", 1),
    ("00001110110010100001110110010", 4),
    ("00101110100110100101110100110", 1),
    ("00000101100110100000101100110", 1),
    ("00000011110110100000011110110", 1),
    ("00000010010010100000010010010", 8),
    ("10010010010010010", 7),
    ("00100101011001100100101011001", 3),
    ("00100101110010100100101110010", 1),
    ("00000001011010100000001011010", 10),
    ("00010110100100100010110100100", 5),
    ("00100111011110100100111011110", 1),
    ("00011100100110100011100100110", 8),
    ("00100110111010100100110111010", 1),
    ("00011010110110100011010110110", 1),
    ("00001100101100100001100101100", 2),
    ("00010101101100100010101101100", 2),
    ("00001010111100100001010111100", 2),
    ("00011111011100100011111011100", 2),
    ("00011001001100100011001001100", 2),
    ("00010011111100100010011111100", 2),
    ("00000110011100100000110011100", 2),
    ("00000000100111100000000100111", 10),
    ("00001001110100100001001110100", 2),
    ("00000000010101100000000010101", 10),
    ("00000101010100100000101010100", 2),
    ("00001101001000100001101001000", 3),
    ("00001011011000100001011011000", 3),
    ("00000111111000100000111111000", 3),
    ("00000001101000100000001101000", 3),
    ("00000100110000100000100110000", 4),
    ("00000010100000100000010100000", 5),
    ("000000000000000", 10),
    ("00000000001100100000000001100", 10),
    ("00000011000100100000011000100", 6),
    ("00010001100010100010001100010", 5),
    ("00010101000111100010101000111", 6),
    ("00011111101110100011111101110", 1),
    ("00010100111010100010100111010", 8),
    ("00111010111011100111010111011", 0),
    ("00010010101010100010010101010", 9),
    ("01010101011101101010101011101", 0),
    ("00010010110011100010010110011", 0),
    ("00001111001111100001111001111", 6),
    ("00111101001111100111101001111", 6),
    ("00111110110101100111110110101", 0),
    ("00001011110011100001011110011", 0),
    ("00001100011110100001100011110", 8),
    ("00011110010011100011110010011", 7),
    ("00100111110101100100111110101", 0),
    ("00010110111101100010110111101", 0),
    ("00001001101101100001001101101", 0),
    ("00001001011111100001001011111", 9),
    ("00101111101001100101111101001", 0),
    ("00001001000110100001001000110", 6),
    ("00011010011101100011010011101", 7),
    ("00111011011111100111011011111", 0),
    ("00001000111011100001000111011", 9),
    ("00011101101001100011101101001", 0),
    ("00010001111011100010001111011", 9),
    ("00111101111101100111101111101", 0),
    ("00010101110101100010101110101", 0),
    ("00001100110101100001100110101", 8),
    ("00110101010011100110101010011", 0),
    ("00000111010011100000111010011", 0),
    ("00010101011110100010101011110", 8),
    ("01011110111011101011110111011", 0),
    ("00000110110111100000110110111", 0),
    ("00010111011001100010111011001", 0),
    ("00010011010111100010011010111", 6),
    ("01011111011111101011111011111", 0),
    ("00001010100101100001010100101", 8),
    ("1010010100101001010", 6),
    ("00101011010101100101011010101", 0),
    ("00000101111111100000101111111", 0),
    ("00001110101011100001110101011", 0),
    ("00000110000101100000110000101", 7),
    ("00001010010111100001010010111", 7),
    ("00101111011011100101111011011", 8),
    ("11011011011011011", 0),
    ("00000101001101100000101001101", 6),
    ("00110110011011100110110011011", 0),
    ("00010111110010100010111110010", 4),
    ("00101011100111100101011100111", 8),
    ("1110011100111001110", 6),
    ("00111011101101100111011101101", 0),
    ("00000100101001100000100101001", 8),
    ("00101001111001100101001111001", 0),
    ("00000100011011100000100011011", 8),
    ("00011011001011100011011001011", 6),
    ("00101110111111100101110111111", 0),
    ("00011001100111100011001100111", 0),
    ("00000011101111100000011101111", 0),
    ("00000011011101100000011011101", 0),
    ("00000111001010100000111001010", 6),
    ("00101010011010100101010011010", 7),
    ("00110100110111100110100110111", 8),
    ("00110111111111100110111111111", 9),
    ("111111111111111", 0),
    ("00000010111001100000010111001", 0),
    ("00001101010001100001101010001", 4),
    ("00010111101011100010111101011", 0),
    ("00011101011011100011101011011", 0),
    ("00000010001011100000010001011", 7),
    ("00010110001111100010110001111", 7),
    ("00011111110111100011111110111", 8),
    ("1111011110111101111", 0),
    ("00000001110001100000001110001", 4),
    ("00010100100011100010100100011", 5),
    ("00011010101111100011010101111", 7),
    ("01011111101101101011111101101", 0),
    ("00001111010110100001111010110", 8),
    ("1101011010110101101", 0),
    ("00010110010110100010110010110", 7),
    ("00101101110111100101101110111", 0),
    ("00000001000011100000001000011", 6),
    ("00001101100011100001101100011", 7),
    ("1100011000110001100", 7),
    ("00011001010101100011001010101", 8),
    ("01010101101111101010101101111", 0),
    ("00000000111110100000000111110", 10),
    ("00001111100100100001111100100", 5),
    ("00100101101011100100101101011", 0),
    ("00011011111001100011011111001", 0),
    ("00001111111101100001111111101", 0),
)

SELF_DUAL_PRINTED = (4462, 5056, 594)
SELF_DUAL_TABLE = (
    ("1110010011010011000110110010110011100100110100010001101100101110111001001101001", 11),
    ("0100110100100010101100101101110101001101001001101011001011011001010011010010001", 11),
    ("1101001000110110001011001100100111010011001101100010110111001001110100100011011", 9),
    ("1000110110100101011100100101101010000101101001010111101001011010100011011010010", 9),
    ("0110100101000001100111101011111001100001010000011001011010111110011010010100000", 9),
    ("0101000000101100101011111111001101010000000011001010111111010011010100000010110", 8),
    ("0001011010000010111010010111110100010010100000101110110101111101000101101000001", 7),
    ("1000001111000101001111000011101011000011110001010111110000111010100000111100010", 5),
    ("0001011110000111111010000111100000010011100001111110110001111000000101111000011", 10),
    ("1111000011011000000001110010011111111000110110000000111100100111111100001101100", 8),
    ("0110110010001000100100110111011101101101100010001001001001110111011011001000100", 8),
    ("0100010000101111101110111101000001000100001010111011101111010100010001000010111", 12),
    ("0010000101110000110011101000111100110001011100001101111010001111001000010111000", 13),
    ("1000010111000100011010100011101110010101110001000111101000111011100001011100010", 12),
    ("0010111000101000110100011101011101101110001010001001000111010111001011100010100", 10),
    ("1100010100100001001110111101111011000100001000010011101011011110110001010010000", 8),
    ("1001000010001010011011110111010010010000100010110110111101110101100100001000101", 7),
    ("1000101110111100011101000100000110001011101111100111010001000011100010111011110", 8),
    ("1101111000100111001000011101100011011110011001110010000110011000110111100010011", 7),
    ("0010011001100000110110011001111101100110011000001001100110011111001001100110000", 10),
    ("1100110000110101001100111100101011001100011101010011001110001010110011000011010", 9),
    ("0000110101111111111100101000000000001101111111111111001000000000000011010111111", 10),
    ("1010111111000000010100000011101110101111110001000101000000111111101011111100000", 10),
    ("1111100000110000000001011100111111111010001100000000011111001111111110000011000", 10),
    ("0000011000110001111110011100111000000110001100111111100111001100000001100011000", 11),
    ("0110001100001000100111001111001101100011000011001001110011110111011000110000100", 9),
    ("1100001001101100001111011001001111000010011111000011110110000011110000100110110", 10),
    ("0100110110110100101100100100101101001101111101001011001000001011010011011011010", 9),
    ("0110110101001101100100101011001001100101010011011001101010110010011011010100110", 7),
    ("0100110000001101101100111111001001011100000011011010001111110010010011000000110", 12),
    ("0110000001100110100111111001100100100000011001101101111110011001011000000110011", 9),
    ("0001100110011010111001100110010100111001100110101100011001100101000110011001101", 6),
    ("0011010001110010110010111000110101110100011100101000101110001101001101000111001", 11),
    ("0100011100111011101110001100010001000111000110111011100011100100010001110011101", 10),
    ("1110011101011110000110001110000111100111000111100001100010100001111001110101111", 9),
    ("1101011110101011001010000111010011010111100010110010100001010100110101111010101", 7),
    ("1010101011111011010101010000010010111010111110110100010100000100101010101111101", 10),
    ("0101111101010010101000001010110111011111010100100010000010101101010111110101001", 8),
    ("1010100100111001010100101100011010101101001110010101011011000110101010010011100", 10),
    ("0010011100010010110110001110111100100111000100001101100011101101001001110001001", 11),
    ("0111000100100000100111101101111101100001001000001000111011011111011100010010000", 11),
    ("0001001000010100101011011110101101010010000101001110110111101011000100100001010", 9),
    ("1000010101100000011110111001111110000100011000000111101010011111100001010110000", 11),
    ("0101011000001010101010011101010101010110001010101010100111110101010101100000101", 10),
    ("1100000101000010000111101011110111100001010000100011111010111101110000010100001", 5),
    ("0000101001011011111101011010010000011010010110111110010110100100000010100101101", 13),
    ("0010100101101000110101101001011100111001011010001100011010010111001010010110100", 8),
    ("1011010000100100010011111101101110110000001001000100101111011011101101000010010", 13),
    ("1101000010010110011011110110100110010000100101100010111101101001110100001001011", 5),
    ("0101101111001111101001000011000001011111110011111010000000110000010110111100111", 10),
    ("0111100111101101100000100001001001111101111011011000011000010010011110011110110", 9),
    ("0111101100101010100001001101010101101011001010101001010011010101011110110010101", 13),
    ("1110110010101101000100110101001011111100101011010000001101010010111011001010110", 10),
    ("1001010110001111011010100111000110010101100011100110101001110000100101011000111", 7),
    ("1000111101111101011100001000001010001111111111010111000000000010100011110111110", 9),
    ("1101111100010111001000001110100011011101000101110010001011101000110111110001011", 12),
    ("1111100010111110000001110100000110111000101111100100011101000001111110001011111", 11),
    ("1000101111110111011101000000100010001011110101110111010000101000100010111111011", 8),
    ("1111101101101111000001001001000011111111011011110000000010010000111110110110111", 10),
    ("0110110111010011100100100011110001101101110000111001001000101100011011011101001", 9),
    ("0111010010101011100010110101110001110100101000111000101101010100011101001010101", 8),
    ("0101010110011111101010100110000001010111100111111010100001100000010101011001111", 12),
    ("1010110011110000010100110000111110101100110100000101001100101111101011001111000", 11),
    ("1100111100010000001100001110011111001111000110000011000011101111110011110001000", 0),
)

NINE_ONE_CODEWORDS = (
    "1000010000",
    "0001001101",
    "1001111001",
    "1111010111",
    "1010101010",
    "0101011000",
    "0110111001",
    "0111010000",
)

# the codewords extended to 18 symbols and ordered for overlap
NINE_ONE_TABLE = (
    ("100001000010000100", 6),
    ("000100110100010011", 5),
    ("100111100110011110", 5),
    ("111101011111110101", 5),
    ("101010101010101010", 5),
    ("010101100001010110", 4),
    ("011011100101101110", 5),
    ("011101000001110100", 3),
)

# merged from NINE_ONE_CODEWORDS: as printed, shortest, with eight consecutive ones
# (printed length, printed bit total, printed overlap total); the 93 drops 13 redundant bits
NINE_ONE_PRINTED = ((106, 144, 38), (93, 106, 13), (102, None, None))
NINE_ONE_106 = (
    "1000010000100001001101000100111100110011110101111111010101010101010101100001010110111001011011"
    "101000001110"
)
NINE_ONE_93 = (
    "100001000010011010001001111001100111101011111110101010101100001010110111001011011101000001110"
)
NINE_ONE_102 = (
    "1000010000100110100010011110011001111010111111110111111101010101011000010101101110010110111010"
    "00001110"
)

# printed rows and columns
SHIFTED_ARRAY_SHAPE = (13, 12)
SHIFTED_ARRAY = (
    "000100111011",
    "001001110110",
    "100111011000",
    "111011000100",
    "110001001110",
    "100111011000",
    "011000100111",
    "001110110001",
    "000100111011",
    "011000100111",
    "110110001001",
    "111011000100",
    "111011000100",
)

# (stated length, bits); the last two come from the local search, at lengths that were stated
# but never printed
SIX_ONE = (12, "000100111011")
SEVEN_ONE = (22, "1100101011000010011110")
TEN_TWO = (38, "11000101101000000100011101001011111101")
