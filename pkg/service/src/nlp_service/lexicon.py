"""Bundled lexical resources for the offline backends.

A compact thesaurus of everyday synonym groups feeds the deterministic
embedding backend (tokens in one group share a feature), small sentiment
word lists feed the polarity backend, and a table of well-known
commonsense effect pairs feeds the scripted relation model.  Real
deployments swap these backends for learned models via configuration.
"""

SYNONYM_GROUPS = [
    ["end", "ending", "ends", "ended", "finish", "finished", "cease", "stop",
     "stopped", "conclude", "concluded", "terminate", "terminated", "retire",
     "retired", "quit", "resign", "resigned", "halt", "halted"],
    ["begin", "begins", "began", "beginning", "start", "starts", "started",
     "commence", "commenced", "launch", "launched", "initiate", "initiated"],
    ["cause", "causes", "caused", "causing", "trigger", "triggers",
     "triggered", "provoke", "provoked", "induce", "induced", "produce",
     "produced", "generate", "generated"],
    ["prevent", "prevents", "prevented", "preventing", "block", "blocks",
     "blocked", "stop", "avert", "averted", "thwart", "thwarted", "hinder",
     "hindered"],
    ["enable", "enables", "enabled", "allow", "allows", "allowed", "permit",
     "permits", "permitted", "grant", "grants", "granted", "facilitate",
     "facilitated"],
    ["intend", "intends", "intended", "aim", "aims", "aimed", "plan", "plans",
     "planned", "seek", "seeks", "sought", "purpose"],
    ["infection", "infections", "infected", "virus", "viruses", "viral",
     "disease", "diseases", "illness", "illnesses", "contagion", "pathogen",
     "pathogens"],
    ["vaccine", "vaccines", "vaccination", "vaccinations", "immunization",
     "immunizations", "inoculation", "jab"],
    ["medicine", "medication", "medications", "drug", "drugs", "remedy",
     "treatment", "treatments", "therapy"],
    ["doctor", "doctors", "physician", "physicians", "clinician",
     "clinicians", "medic", "medics"],
    ["hospital", "hospitals", "clinic", "clinics", "infirmary"],
    ["death", "deaths", "die", "died", "dying", "fatality", "fatalities",
     "mortality", "deceased"],
    ["injury", "injuries", "injured", "wound", "wounds", "wounded", "harm",
     "harmed", "hurt"],
    ["sick", "sickness", "ill", "unwell", "ailing"],
    ["tired", "tiredness", "fatigue", "fatigued", "exhaustion", "exhausted",
     "weariness", "weary"],
    ["exercise", "exercises", "exercised", "exercising", "workout",
     "workouts", "training"],
    ["drought", "droughts", "dry", "dryness", "arid", "aridity"],
    ["rain", "rains", "rainfall", "precipitation", "showers"],
    ["flood", "floods", "flooding", "inundation", "deluge"],
    ["storm", "storms", "hurricane", "hurricanes", "typhoon", "cyclone",
     "tempest"],
    ["earthquake", "earthquakes", "quake", "quakes", "tremor", "tremors",
     "seism"],
    ["fire", "fires", "wildfire", "wildfires", "blaze", "blazes"],
    ["crop", "crops", "harvest", "harvests", "yield", "yields", "produce"],
    ["farm", "farms", "farming", "agriculture", "agricultural"],
    ["food", "foods", "nourishment", "nutrition"],
    ["water", "waters", "hydration", "hydrated"],
    ["money", "cash", "funds", "funding", "capital", "finance", "finances"],
    ["pay", "pays", "paid", "payment", "payments", "salary", "salaries",
     "wage", "wages", "compensation"],
    ["job", "jobs", "employment", "occupation", "work", "career", "careers"],
    ["jobless", "unemployment", "unemployed", "layoff", "layoffs"],
    ["company", "companies", "firm", "firms", "business", "businesses",
     "corporation", "corporations", "employer", "employers"],
    ["economy", "economic", "economies", "economical"],
    ["growth", "grow", "grows", "grew", "growing", "expansion", "expand",
     "expanded", "increase", "increases", "increased", "rise", "rises",
     "rose", "rising", "boost", "boosted", "gain", "gains"],
    ["decline", "declines", "declined", "declining", "decrease", "decreases",
     "decreased", "drop", "drops", "dropped", "fall", "falls", "fell",
     "falling", "reduction", "reduced", "shrink", "shrank"],
    ["price", "prices", "cost", "costs", "expense", "expenses"],
    ["poverty", "poor", "impoverished", "destitute"],
    ["wealth", "wealthy", "rich", "affluent", "prosperity", "prosperous"],
    ["tax", "taxes", "taxation", "levy", "levies"],
    ["trade", "trades", "trading", "commerce", "exchange"],
    ["market", "markets", "marketplace"],
    ["government", "governments", "state", "administration", "authorities"],
    ["law", "laws", "legislation", "statute", "statutes", "regulation",
     "regulations", "rule", "rules"],
    ["police", "officers", "constabulary", "enforcement"],
    ["crime", "crimes", "criminal", "criminals", "offense", "offenses",
     "felony", "felonies"],
    ["prison", "prisons", "jail", "jails", "custody", "incarceration",
     "detention"],
    ["war", "wars", "warfare", "conflict", "conflicts", "combat",
     "hostilities"],
    ["peace", "peaceful", "truce", "ceasefire", "armistice"],
    ["protest", "protests", "demonstration", "demonstrations", "rally",
     "rallies", "march", "marches"],
    ["vote", "votes", "voting", "ballot", "ballots", "election", "elections"],
    ["school", "schools", "education", "educational", "schooling"],
    ["student", "students", "pupil", "pupils", "learner", "learners"],
    ["teacher", "teachers", "instructor", "instructors", "educator",
     "educators", "professor", "professors"],
    ["study", "studies", "research", "researches", "investigation",
     "investigations", "inquiry", "probe", "analysis"],
    ["test", "tests", "testing", "exam", "exams", "examination", "screening",
     "assessment"],
    ["child", "children", "kid", "kids", "minor", "minors", "youth",
     "youths"],
    ["people", "persons", "individuals", "citizens", "residents",
     "population", "populace", "public"],
    ["city", "cities", "town", "towns", "municipality", "municipalities",
     "urban"],
    ["country", "countries", "nation", "nations", "national", "nationwide"],
    ["road", "roads", "street", "streets", "highway", "highways", "route",
     "routes"],
    ["car", "cars", "vehicle", "vehicles", "automobile", "automobiles"],
    ["transport", "transports", "transportation", "transit", "shipping"],
    ["travel", "travels", "traveling", "journey", "journeys", "trip",
     "trips"],
    ["house", "houses", "housing", "home", "homes", "residence",
     "residences", "dwelling", "dwellings"],
    ["build", "builds", "built", "building", "construct", "constructed",
     "construction"],
    ["infrastructure", "infrastructures", "utilities", "facilities"],
    ["energy", "power", "electricity", "fuel", "fuels"],
    ["climate", "weather", "meteorological"],
    ["pollution", "pollutants", "contamination", "contaminants", "smog",
     "emissions"],
    ["temperature", "temperatures", "heat", "warming", "warmth"],
    ["internet", "online", "web", "cyberspace"],
    ["computer", "computers", "laptop", "laptops", "machine", "machines"],
    ["phone", "phones", "telephone", "telephones", "smartphone",
     "smartphones", "mobile"],
    ["news", "media", "press", "journalism"],
    ["big", "large", "huge", "enormous", "vast", "massive", "giant"],
    ["small", "little", "tiny", "minor", "slight", "modest"],
    ["fast", "quick", "rapid", "swift", "speedy"],
    ["slow", "sluggish", "gradual", "leisurely"],
    ["important", "significant", "crucial", "critical", "vital", "key",
     "major", "essential"],
    ["problem", "problems", "issue", "issues", "trouble", "troubles",
     "difficulty", "difficulties"],
    ["help", "helps", "helped", "helping", "assist", "assists", "assisted",
     "assistance", "aid", "aids", "aided", "support", "supports",
     "supported"],
    ["improve", "improves", "improved", "improving", "improvement",
     "enhance", "enhanced", "enhancement", "better", "betterment",
     "ameliorate"],
    ["damage", "damages", "damaged", "destruction", "destroy", "destroys",
     "destroyed", "devastation", "devastated", "ruin", "ruined", "wreck",
     "wrecked"],
    ["protect", "protects", "protected", "protection", "safeguard",
     "safeguarded", "shield", "shielded", "defend", "defended", "defense"],
    ["disruption", "disruptions", "disrupt", "disrupted", "interruption",
     "interruptions", "breakdown", "breakdowns"],
    ["spread", "spreads", "spreading", "diffusion", "propagation",
     "transmission", "transmitted"],
    ["response", "responses", "reaction", "reactions", "reply", "replies"],
    ["effort", "efforts", "endeavor", "endeavors", "attempt", "attempts",
     "initiative", "initiatives"],
    ["worker", "workers", "employee", "employees", "staff", "personnel",
     "laborer", "laborers"],
    ["morale", "spirits", "satisfaction", "contentment"],
    ["strike", "strikes", "walkout", "walkouts", "stoppage"],
    ["match-fixing", "fixing", "rigging", "cheating", "fraud"],
    ["sideline", "sidelines", "sidelined", "sidelining", "exclude",
     "excluded", "exclusion", "marginalize", "marginalized"],
    ["trace", "traces", "traced", "tracing", "track", "tracked", "tracking"],
    ["carrier", "carriers", "spreader", "spreaders", "vector", "vectors"],
    ["hidden", "concealed", "silent", "undetected", "unseen"],
]

SYNONYM_INDEX = {}
for _i, _group in enumerate(SYNONYM_GROUPS):
    for _word in _group:
        # first group wins for words listed twice (e.g. "stop")
        SYNONYM_INDEX.setdefault(_word, f"syn{_i}")


POSITIVE_WORDS = frozenset("""
able advance aid beneficial benefit benefits best better boost calm clean
comfort confidence cure effective efficient empower encourage enjoy enrich
fair gain gains good grants grow growth happy heal health healthy help
helped helpful helping helps improve improved improvement improving
innovation progress prosperity protect protected protection recover
recovery relief reliable safe safety satisfaction secure stability strong
succeed success successful support thrive win
""".split())

NEGATIVE_WORDS = frozenset("""
abuse accident attack bad blame collapse corruption crash crime crisis
damage danger dangerous death deaths decline decrease disaster disease
disrupt disruption disruptions doubt drop fail failed failure failures
fatigue fear fraud guilty harm harmful hurt illness inefficiencies
inefficiency infection injury injustice kill loss losses poor problem
problems recession risk risks shortage sideline sidelined sidelining
threat unnecessarily unsafe violence virus weak worse worst wrong
""".split())

NEGATION_TOKENS = frozenset(
    ["no", "not", "never", "without", "none", "nothing", "cannot", "nor", "neither"]
)


# Well-known effect pairs for the scripted relation model: maps
# (event keyword, event keyword) -> relation reply.
COMMONSENSE_PAIRS = {
    ("earthquake", "death"): "cause",
    ("earthquake", "deaths"): "cause",
    ("earthquake", "damage"): "cause",
    ("smoking", "cancer"): "cause",
    ("rain", "flood"): "cause",
    ("drought", "famine"): "cause",
    ("vaccine", "infection"): "prevent",
    ("vaccination", "disease"): "prevent",
    ("exercise", "health"): "cause",
    ("internet", "access"): "enable",
    ("education", "opportunity"): "enable",
}
