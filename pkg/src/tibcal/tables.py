"""Name and attribute tables used across the calendar and astrology code.

Most tables here are small fixed cycles (elements, animals, trigrams, nine
numbers, weekday names).  Sanskrit terms are given in plain ASCII without
diacritics.

Two tables are not fully determined by the primary sources this engine
follows: the element assigned to each of the 27 lunar mansions and the
names of the 10 elemental-yoga combinations.  Those follow the wider
Tibetan elemental-astrology literature; they are plain data and can be
swapped out without touching any code (see MANSION_ELEMENTS and
ELEMENTAL_YOGA_NAMES below).
"""

from __future__ import annotations

# The five elements in standard order, with associated colours.
ELEMENTS = ("wood", "fire", "earth", "iron", "water")
ELEMENT_COLOURS = {
    "wood": "green",
    "fire": "red",
    "earth": "yellow",
    "iron": "white",
    "water": "dark blue",
}
# Parenthesized colour variants (used e.g. in Mongolia).
ELEMENT_COLOURS_ALT = {
    "wood": "blue",
    "fire": "red",
    "earth": "yellow",
    "iron": "white",
    "water": "black",
}

# The 12 animals with genders and Tibetan names, cycle position 1..12
# counted from the start of a Chinese 60-year cycle.
ANIMALS = ("Mouse", "Ox", "Tiger", "Rabbit", "Dragon", "Snake",
           "Horse", "Sheep", "Monkey", "Bird", "Dog", "Pig")
ANIMAL_TIBETAN = ("byi ba", "glang", "stag", "yos", "'brug", "sbrul",
                  "rta", "lug", "spre'u", "bya", "khyi", "phag")

# 10-year cycle: (element, gender) for positions 1..10 of a Chinese cycle.
TEN_CYCLE = tuple((ELEMENTS[(i - 1) // 2], "male" if i % 2 == 1 else "female")
                  for i in range(1, 11))
CELESTIAL_STEMS = ("jia", "yi", "bing", "ding", "wu",
                   "ji", "geng", "xin", "ren", "gui")
STEM_TIBETAN = ("shing-pho", "shing-mo", "me-pho", "me-mo", "sa-pho",
                "sa-mo", "lcags-pho", "lcags-mo", "chu-pho", "chu-mo")

# Days of week 0..6 with Tibetan names, planets and elements.
WEEKDAYS = ("Saturday", "Sunday", "Monday", "Tuesday",
            "Wednesday", "Thursday", "Friday")
WEEKDAY_TIBETAN = ("spen ma", "nyi ma", "zla ba", "mig dmar",
                   "lhag pa", "phur bu", "pa sangs")
WEEKDAY_PLANET = ("Saturn", "Sun", "Moon", "Mars",
                  "Mercury", "Jupiter", "Venus")
WEEKDAY_ELEMENT = ("earth", "fire", "water", "fire", "water", "wind", "earth")

# Month names (Phugpa system): Tibetan and Sanskrit lunar-mansion names,
# indexed by month number 1..12.
MONTH_NAMES_TIBETAN = (
    "mchu", "dbo", "nag pa", "sa ga", "snron", "chu stod",
    "gro bzhin", "khrums", "tha skar", "smin drug", "mgo", "rgyal")
MONTH_NAMES_SANSKRIT = (
    "Magha", "Phalguna", "Caitra", "Vaisakha", "Jyestha", "Asadha",
    "Sravana", "Bhadrapada", "Asvina", "Kartikka", "Margasirsa", "Pausa")

# Month animals: Phugpa almanacs set month 11 = Tiger, Tsurphu month 1 =
# Tiger.  Values are cycle positions 1..12 into ANIMALS.
def month_animal_phugpa(month: int) -> int:
    return (month + 4 - 1) % 12 + 1


def month_animal_tsurphu(month: int) -> int:
    return (month + 2 - 1) % 12 + 1


# The 27 lunar mansions, numbered 0..26, Tibetan and Sanskrit.
MANSIONS_TIBETAN = (
    "tha skar", "bra nye", "smin drug", "snar ma", "mgo", "lag",
    "nabs so", "rgyal", "skag", "mchu", "gre", "dbo", "me bzhi",
    "nag pa", "sa ri", "sa ga", "lha mtshams", "snron", "snrubs",
    "chu stod", "chu smad", "gro bzhin", "mon gre", "mon gru",
    "khrums stod", "khrums smad", "nam gru")
MANSIONS_SANSKRIT = (
    "Asvini", "Bharani", "Krttika", "Rohini", "Mrgasirsa", "Ardra",
    "Punarvasu", "Pusya", "Aslesa", "Magha", "Purvaphalguni",
    "Uttaraphalguni", "Hasta", "Citra", "Svati", "Visakha", "Anuradha",
    "Jyestha", "Mula", "Purvasadha", "Uttarasadha", "Sravana",
    "Dhanistha", "Satabhisaj", "Purvabhadrapada", "Uttarabhadrapada",
    "Revati")

# The 27 yogas, numbered 0..26.
YOGAS = (
    "viskambha", "priti", "ayusman", "saubhagya", "sobhana", "atiganda",
    "sukarman", "dhrti", "sula", "ganda", "vrddhi", "dhruva", "vyaghata",
    "harsana", "vajra", "siddhi", "vyatipata", "variyas", "parigha",
    "siva", "siddha", "sadhya", "subha", "sukla", "brahman", "indra",
    "vaidhrti")

# The 11 karanas: 7 changing (cycle positions 1..7) and 4 fixed.
KARANAS_CHANGING = ("bava", "balava", "kaulava", "taitila",
                    "gara", "vanija", "visti")
KARANAS_FIXED = {1: "kimstughna", 58: "sakuni", 59: "catuspada", 60: "naga"}

# The 8 trigrams in King Wen order, positions 1..8.
TRIGRAMS = ("li", "khon", "dwa", "khen", "kham", "gin", "zin", "zon")
TRIGRAM_CHINESE = ("li", "kun", "dui", "qian", "kan", "gen", "zhen", "xun")
TRIGRAM_DIRECTION = ("S", "SW", "W", "NW", "N", "NE", "E", "SE")
TRIGRAM_ELEMENT = ("fire", "earth", "iron", "sky",
                   "water", "mountain", "wood", "wind")

# The 9 numbers with colour, element and direction, positions 1..9.
NINE_COLOUR = ("white", "black", "blue", "green", "yellow",
               "white", "red", "white", "red")
NINE_ELEMENT = ("iron", "water", "water", "wood", "earth",
                "iron", "fire", "iron", "fire")
NINE_DIRECTION = ("N", "SW", "E", "SE", "Centre", "NW", "W", "NE", "S")
# 3x3 layout of the nine numbers by direction (a magic square).
MAGIC_SQUARE = ((4, 9, 2), (3, 5, 7), (8, 1, 6))

# Life and spirit elements per animal (cycle positions 1..12).
LIFE_ELEMENT = ("water", "earth", "wood", "wood", "earth", "fire",
                "fire", "earth", "iron", "iron", "earth", "water")
SPIRIT_ELEMENT = ("iron", "fire", "water", "water", "fire", "wood",
                  "wood", "fire", "earth", "earth", "fire", "iron")

# Fortune element, 4-year cycle by position amod 4 of the Chinese cycle.
FORTUNE_ELEMENT = ("wood", "water", "iron", "fire")

# Body-element pipeline: intermediate element number x by 6-year cycle
# (positions 1..6), then (power - x) mod 5 maps through BODY_FROM_DIFF.
BODY_X_NUMBER = (1, 1, 5, 5, 4, 4)
BODY_FROM_DIFF = ("iron", "water", "fire", "earth", "wood")

# Elements of the lunar mansions for the elemental yoga, indexed 0..26.
# Four-element scheme (earth, water, fire, wind) from the elemental
# astrology literature; the combination logic does not depend on the
# specific assignment.
MANSION_ELEMENTS = (
    "wind",   # 0  tha skar
    "fire",   # 1  bra nye
    "fire",   # 2  smin drug
    "earth",  # 3  snar ma
    "wind",   # 4  mgo
    "water",  # 5  lag
    "wind",   # 6  nabs so
    "fire",   # 7  rgyal
    "water",  # 8  skag
    "fire",   # 9  mchu
    "fire",   # 10 gre
    "earth",  # 11 dbo
    "wind",   # 12 me bzhi
    "fire",   # 13 nag pa
    "wind",   # 14 sa ri
    "fire",   # 15 sa ga
    "earth",  # 16 lha mtshams
    "water",  # 17 snron
    "wind",   # 18 snrubs
    "water",  # 19 chu stod
    "earth",  # 20 chu smad
    "wind",   # 21 gro bzhin
    "earth",  # 22 mon gre
    "water",  # 23 mon gru
    "fire",   # 24 khrums stod
    "water",  # 25 khrums smad
    "water",  # 26 nam gru
)

# Names of the 10 elemental yogas (unordered pairs of weekday element and
# mansion element).  Same caveat as MANSION_ELEMENTS: documented data,
# swappable without code changes.
ELEMENTAL_YOGA_NAMES = {
    frozenset(["earth"]): "accomplishment",
    frozenset(["water"]): "nectar",
    frozenset(["fire"]): "increase",
    frozenset(["wind"]): "power",
    frozenset(["earth", "water"]): "prosperity",
    frozenset(["fire", "wind"]): "blazing",
    frozenset(["earth", "fire"]): "burning",
    frozenset(["water", "fire"]): "death",
    frozenset(["earth", "wind"]): "decline",
    frozenset(["water", "wind"]): "separation",
}

# The Indian (Prabhava) 60-year cycle of names, positions 1..60:
# (Tibetan, Sanskrit).
PRABHAVA_NAMES = (
    ("rab byung", "prabhava"), ("rnam byung", "vibhava"),
    ("dkar po", "suklata"), ("rab myos", "pramadi"),
    ("skyes bdag", "prajapati"), ("anggi ra", "ankira"),
    ("dpal gdong", "srimukha"), ("dngos po", "bhava"),
    ("na tshod ldan", "yuvika"), ("'dzin byed", "dhritu"),
    ("dbang phyug", "isvara"), ("'bru mang po", "vahudhvanya"),
    ("myos ldan", "pramadi"), ("rnam gnon", "vikrama"),
    ("khyu mchog", "brisabha"), ("sna tshogs", "citra"),
    ("nyi ma", "bhanu"), ("nyi sgrol byed", "bhanutara"),
    ("sa skyong", "virthapa"), ("mi zad", "aksaya"),
    ("thams cad 'dul", "sarvajit"), ("kun 'dzin", "sarvadhari"),
    ("'gal ba", "virodhi"), ("rnam 'gyur", "vikrita"),
    ("bong bu", "khara"), ("dga' ba", "nanda"),
    ("rnam rgyal", "vijaya"), ("rgyal ba", "jaya"),
    ("myos byed", "mada"), ("gdong ngan", "durmukha"),
    ("gser 'phyang", "hemalambha"), ("rnam 'phyang", "vilambhi"),
    ("sgyur byed", "vikari"), ("kun ldan", "sarvavati"),
    ("'phar ba", "slava"), ("dge byed", "subhakrita"),
    ("mdzes byed", "sobhana"), ("khro mo", "krodhi"),
    ("sna tshogs dbyig", "visvabandhu"), ("zil gnon", "parabhava"),
    ("spre'u", "pravamga"), ("phur bu", "kilaka"),
    ("zhi ba", "saumya"), ("thun mong", "sadharana"),
    ("'gal byed", "virobhakrita"), ("yongs 'dzin", "paradhari"),
    ("bag med", "pramadi"), ("kun dga'", "ananda"),
    ("srin bu", "raksasa"), ("me", "anala"),
    ("dmar ser can", "vingala"), ("dus kyi pho nya", "kaladuti"),
    ("don grub", "siddhartha"), ("drag po", "rudra"),
    ("blo ngan", "durmati"), ("rnga chen", "dundubhi"),
    ("khrag skyug", "rudhirura"), ("mig dmar", "raktaksi"),
    ("khro bo", "krodhana"), ("zad pa", "ksayaka"),
)
